from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """
    Configuração das tolerâncias numéricas e do benchmark do projeto
    """
    # Tolerâncias
    GRID_UNIFORMITY_RTOL: float = 1e-9
    LATTICE_ATOL: float = 1e-6
    ORIGIN_RTOL: float = 1e-6
    ORACLE_RTOL: float = 1e-9

    # Soma direta (matriz montada em blocos de linhas)
    NAIVE_BLOCK_ROWS: int = 512

    # Benchmark
    NAIVE_SIZE_CAP: int = 4096
    BENCH_SIZES: list[int] = [2**k for k in range(12, 18)]
    BENCH_ODD_SIZES: list[int] = [201, 1001, 4097]
    BENCH_REPETITIONS: int = 5

    # Logging
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="RIEMANNFT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

settings = Settings()

# Riemann FT

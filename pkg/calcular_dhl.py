"""
Script de entrada: calcula con funciones simétricas dobles y el álgebra de Hall derivada.

Uso:
    python calcular_dhl.py expand --bip "1|1" --format json
    python calcular_dhl.py verify --suite mirror --max-size 3
"""
import sys

from dhl.cli import main

if __name__ == "__main__":
    sys.exit(main())

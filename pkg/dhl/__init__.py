"""
Funciones simétricas dobles, base de Hall-Littlewood doble y álgebra de Hall derivada
de la aljaba de Jordan, con aritmética exacta.
"""

__version__ = "0.1.0"

"""Constantes de configuración del paquete."""

# Series generadoras
GRADO_POR_DEFECTO = 6
GRADO_MAXIMO = 6  # cota configurada; --max-degree la amplía hasta GRADO_TOPE
GRADO_TOPE = 8

# Oráculo por fuerza bruta sobre F_q
ORACULO_TAMANO_MAXIMO = 4
ORACULO_PRIMOS = (2, 3)

# Volcado de la tabla de Hall
TABLA_HALL_TAMANO_MAXIMO = 7

# Suites de verificación: tamaño por defecto de cada barrido
TAMANOS_SUITE = {
    "conjugate": 8,
    "strips": 6,
    "dominance": 5,
    "operators": 5,
    "ratfun": 8,
    "qbinom": 8,
    "triangularity": 6,
    "roundtrip": 5,
    "order": 5,
    "specialization": 5,
    "mirror": 3,
    "phipsi": 6,
    "pieri-horizontal": 4,
    "pieri-vertical": 3,
    "pieri-schur": 4,
    "pieri-symmetry": 4,
    "hall-symmetry": 5,
    "hall-oracle": 4,
    "hall-pieri": 6,
    "riedtmann-peng": 3,
    "hall-support": 5,
    "dhall-pieri": 3,
    "hall-numbers": 2,
    "isomorphism": 3,
    "table1": 3,
    "generation": 4,
    "embeddings": 4,
    "schur-t0": 5,
    "genfun": 4,
}

SEMILLA_POR_DEFECTO = 42
FORMATO_POR_DEFECTO = "plain"
FORMATOS = ("json", "latex", "plain")

NIVEL_LOG_POR_DEFECTO = "INFO"
FORMATO_LOG = '%(asctime)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'

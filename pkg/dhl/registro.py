import logging
import sys

from dhl.config import FORMATO_LOG, NIVEL_LOG_POR_DEFECTO


def configurar_logging(nivel=NIVEL_LOG_POR_DEFECTO, archivo=None):
    """
    Configura el registro del paquete.
    - Los mensajes van a stderr para no mezclarse con la salida de datos.
    - Si se indica un archivo, se añade un FileHandler.

    Args:
        nivel: Nombre del nivel de registro ('DEBUG', 'INFO', ...)
        archivo: Ruta opcional del archivo de registro
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if archivo:
        handlers.append(logging.FileHandler(archivo))
    logging.basicConfig(
        level=getattr(logging, str(nivel).upper(), logging.INFO),
        format=FORMATO_LOG,
        handlers=handlers,
        force=True,
    )
    # sympy no registra nada útil a este nivel
    logging.getLogger('sympy').setLevel(logging.WARNING)
    return logging.getLogger('dhl')

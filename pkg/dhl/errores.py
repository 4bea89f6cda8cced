"""Excepciones del paquete."""


class ErrorDHL(Exception):
    """Raíz de los errores propios del paquete."""


class ErrorEntrada(ErrorDHL, ValueError):
    """Entrada mal formada o fuera de rango."""


class ErrorVariable(ErrorDHL, ValueError):
    """Operación entre funciones racionales de variables distintas."""


class ErrorPolo(ErrorDHL, ZeroDivisionError):
    """Sustitución en un polo o división por cero."""


class ErrorLimite(ErrorDHL):
    """Tamaño o grado por encima de los límites configurados."""


class ErrorSerie(ErrorDHL):
    """Término constante inadecuado en una operación de series."""


class ErrorInterno(ErrorDHL):
    """Un resultado viola una garantía matemática; indica un fallo de implementación."""

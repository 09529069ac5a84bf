# core/config.py
import os


class Config:
    # Flask
    SECRET_KEY = os.environ.get("SECRET_KEY", "dev-secret-key-change-me")
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")

    # Limit liczby cykli bezcięciwowych (wykładniczo wiele w najgorszym razie)
    CHORDLESS_CAP = int(os.environ.get("COQKIT_CAP", "10000"))
    # Limit liczby minorów k×k przy kratach Alexandra
    MINOR_CAP = int(os.environ.get("COQKIT_MINOR_CAP", "250000"))

    # Budżet BFS dla weryfikacji "totally proper"
    TP_BUDGET = int(os.environ.get("COQKIT_TP_BUDGET", "500"))

    # Domyślne limity eksploratora klas mutacyjnych
    MAX_QUIVERS = int(os.environ.get("COQKIT_MAX_QUIVERS", "2000"))
    MAX_DEPTH = int(os.environ.get("COQKIT_MAX_DEPTH", "25"))
    MAX_ENTRY = int(os.environ.get("COQKIT_MAX_ENTRY", "1000000"))

    # Postać kanoniczna – pełny przegląd permutacji tylko dla małych n
    CANONICAL_MAX_N = int(os.environ.get("COQKIT_CANONICAL_MAX_N", "10"))
    PERMUTATION_CAP = int(os.environ.get("COQKIT_PERMUTATION_CAP", "200000"))

    # Katalog z przykładowymi plikami JSON
    DATA_DIR = os.environ.get("COQKIT_DATA_DIR", "data/quivers")

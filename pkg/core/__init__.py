# core/__init__.py
# Wspólne klocki: konfiguracja, logowanie, błędy, dokładna algebra liniowa.

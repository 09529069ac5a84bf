# interface/__init__.py
# Wejścia: CLI (argparse) + api (REST).

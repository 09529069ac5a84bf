# integration/__init__.py
# Źródła kołczanów: wbudowany korpus i pliki JSON.

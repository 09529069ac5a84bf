# domain/__init__.py
# Modele domenowe (Quiver, CyclicOrdering, IntPolynomial etc.).

# application/__init__.py
# Use-case'y: porządki cykliczne, właściwość, niezmienniki, warkocze, eksplorator.

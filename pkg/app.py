# app.py
# wczytanie .env (dev-friendly) – przed importem Config, który czyta os.environ
try:
    from dotenv import load_dotenv
    load_dotenv()  # wczyta zmienne z .env, jeśli istnieje
    # .env.local nadpisuje tylko brakujące wartości
    load_dotenv(dotenv_path='.env.local', override=False)
except Exception:
    pass

from flask import Flask  # noqa: E402
from core.config import Config  # noqa: E402
from core.logging_config import configure_logging  # noqa: E402
from interface.api import api_bp  # noqa: E402


def create_app() -> Flask:
    app = Flask(__name__)
    app.config.from_object(Config)
    # stabilny JSON (kolejność kluczy)
    app.json.sort_keys = True

    configure_logging(app)

    app.register_blueprint(api_bp)

    return app


if __name__ == "__main__":
    app = create_app()
    app.run(debug=True)

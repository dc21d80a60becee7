from .app import create_app
from .session import AnalysisSession, EngineConfig

__all__ = ["AnalysisSession", "EngineConfig", "create_app"]

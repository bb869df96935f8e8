"""Standard and PSD zero forcing on small simple graphs."""

__version__ = "0.1.0"

from .analysis import ForcingAnalyzer, create_analyzer  # noqa: E402
from .config import ForcingLabConfig, OrderCapExceededError  # noqa: E402
from .forcing import PreconditionError  # noqa: E402
from .graphs import Graph6Error, from_graph6, to_graph6  # noqa: E402
from .models import Graph, GraphError, Rule, VertexSet  # noqa: E402

__all__ = [
    "ForcingAnalyzer",
    "ForcingLabConfig",
    "Graph",
    "Graph6Error",
    "GraphError",
    "OrderCapExceededError",
    "PreconditionError",
    "Rule",
    "VertexSet",
    "__version__",
    "create_analyzer",
    "from_graph6",
    "to_graph6",
]

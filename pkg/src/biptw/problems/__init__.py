from .cut import MaxCut
from .kt import KtCover
from .oct import OddCycleTransversal
from .vc import VertexCover, independent_set_value

PLUGINS = {
    "vc": VertexCover,
    "oct": OddCycleTransversal,
    "maxcut": MaxCut,
}


def make_plugin(name, t=3):
    if name in ("vc", "is"):
        return VertexCover()
    if name == "kt-cover":
        return KtCover(t)
    if name == "oct":
        return OddCycleTransversal()
    if name == "maxcut":
        return MaxCut()
    raise ValueError(f"unknown problem {name!r}")


__all__ = ["MaxCut", "KtCover", "OddCycleTransversal", "VertexCover", "make_plugin",
           "independent_set_value"]

"""Coded multicast scheduling under intermittent lossy feedback."""

from . import _gidnc
from ._gidnc import *  # noqa: F401,F403

__all__ = [name for name in dir(_gidnc) if not name.startswith("_")]

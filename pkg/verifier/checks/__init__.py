from .base import BaseCheck
from .registry import CheckRegistry

__all__ = ['BaseCheck', 'CheckRegistry']

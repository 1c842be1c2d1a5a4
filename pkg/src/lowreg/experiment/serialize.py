# -*- coding: utf-8 -*-
"""The serialization module for run configurations and results."""
import importlib
import json
from typing import Any, Optional

import numpy as np

_PACKAGE = "lowreg."


def _tagged_class(data: dict) -> Optional[type]:
    """Class named by a `__module__`/`__name__` tag, only inside lowreg."""
    module_name = data.get("__module__")
    class_name = data.get("__name__")
    if not (isinstance(module_name, str) and isinstance(class_name, str)):
        return None
    if not module_name.startswith(_PACKAGE):
        return None
    cls = getattr(importlib.import_module(module_name), class_name, None)
    return cls if hasattr(cls, "from_dict") else None


def _default_serialize(obj: Any) -> Any:
    """Serialize the object when `json.dumps` cannot handle it."""
    if hasattr(obj, "to_dict") and type(obj).__module__.startswith(_PACKAGE):
        return {"__module__": type(obj).__module__, "__name__": type(obj).__name__, **obj.to_dict()}
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _deserialize_hook(data: dict) -> Any:
    cls = _tagged_class(data)
    return data if cls is None else cls.from_dict(data)


def serialize(obj: Any) -> str:
    """Serialize the object to a JSON string with sorted keys."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, default=_default_serialize)


def deserialize(s: str) -> Any:
    """Parse JSON, rebuilding tagged lowreg objects through their `from_dict`."""
    return json.loads(s, object_hook=_deserialize_hook)


def is_serializable(obj: Any) -> bool:
    try:
        serialize(obj)
    except (TypeError, ValueError):
        return False
    return True

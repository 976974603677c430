"""Mixins shared by the public dataclasses of every subpackage."""

from __future__ import annotations
from typing import Any
import dataclasses
import numpy as np
import scipy.sparse

__all__ = [
    "Printable",
]

_MAX_ITEMS = 8
"""Mappings with more entries than this are summarized instead of listed."""


@dataclasses.dataclass(eq=False, repr=False)
class Printable:
    """
    A dataclass whose representation lists its fields one per line,
    indenting nested :class:`Printable` fields.

    Fields declared with ``repr=False``, such as large operator matrices,
    are left out.
    """

    @classmethod
    def _val_to_string(
        cls,
        val: Any,
        pre: str,
        tab: str,
        field_str: str,
    ) -> str:
        if isinstance(val, Printable):
            return val.to_string(prefix=f"{pre}{tab}")
        if scipy.sparse.issparse(val):
            return f"<{val.shape[0]}x{val.shape[1]} sparse matrix with {val.nnz} stored entries>"
        if isinstance(val, np.ndarray):
            return np.array2string(a=val, separator=", ", prefix=field_str)
        if isinstance(val, (list, tuple)) and any(isinstance(v, Printable) for v in val):
            inner = f"{pre}{tab}"
            items = "".join(
                f"{inner}{tab}{cls._val_to_string(v, inner, tab, inner)},\n" for v in val
            )
            return f"[\n{items}{inner}]"
        if isinstance(val, dict) and len(val) > _MAX_ITEMS:
            return f"<dict with {len(val)} entries>"
        if type(val).__module__.startswith("sympy"):
            # field elements of sympy print as their expression
            return str(val)
        return repr(val)

    def to_string(
        self,
        prefix: None | str = None,
    ) -> str:
        """
        Public-facing version of ``__repr__`` with a prefix whose length
        sets the indentation of every line of the result.

        Parameters
        ----------
        prefix
            an optional string, the length of which is used to calculate how
            much whitespace to add to the result.
        """
        pre = " " * len(prefix) if prefix is not None else ""
        tab = " " * 4

        lines = []
        for f in dataclasses.fields(self):
            if not f.repr:
                continue
            field_str = f"{pre}{tab}{f.name}="
            val_str = self._val_to_string(
                val=getattr(self, f.name),
                pre=pre,
                tab=tab,
                field_str=field_str,
            )
            lines.append(f"{field_str}{val_str},\n")

        result_fields = "".join(lines)
        if result_fields:
            result_fields = f"\n{result_fields}{pre}"

        return f"{self.__class__.__qualname__}({result_fields})"

    def __repr__(self):
        return self.to_string()

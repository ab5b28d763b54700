import json
import logging
from pathlib import Path
from typing import List, Literal, Union

from pydantic import Field

from ..cyclic import CyclicAlgebra, CyclicSpec, build_cyclic
from ..exact import FieldDescriptor, Matrix
from ..exceptions import BadSpecError, InvalidInputError
from ..leibniz import LeibnizAlgebra
from . import _Base

log = logging.getLogger("leibniz.models.files")


class CyclicBlock(_Base):
    kind: Literal["cyclic"] = "cyclic"
    n: int = Field(ge=1, description="Dimension")
    alpha: List[str] = Field(default_factory=list, description="alpha_2..alpha_n as scalar literals")


class BracketEntry(_Base):
    left: int = Field(ge=1)
    right: int = Field(ge=1)
    value: List[str] = Field(description="Coordinates of [b_left, b_right]")


class TableBlock(_Base):
    kind: Literal["table"] = "table"
    dim: int = Field(ge=1)
    brackets: List[BracketEntry] = []


class SpecFile(_Base):
    """
    An algebra on disk: ``{"field": {...}, "algebra": {"kind": "cyclic" | "table", ...}}``.

    Scalars are strings in the text syntax of the field and indices are 1-based.
    """

    field: FieldDescriptor
    algebra: Union[CyclicBlock, TableBlock] = Field(discriminator="kind")

    def build(self) -> Union[CyclicAlgebra, LeibnizAlgebra]:
        """
        Raises:
            BadSpecError: wrong coefficient count, index out of range or a repeated bracket.
            LeibnizIdentityError: a table violates the identity.
        """
        field = self.field.canonical()
        block = self.algebra
        if isinstance(block, CyclicBlock):
            return build_cyclic(CyclicSpec(field, block.n, tuple(block.alpha)))
        tensor = {}
        for entry in block.brackets:
            key = (entry.left - 1, entry.right - 1)
            if entry.left > block.dim or entry.right > block.dim:
                raise BadSpecError(f"Bracket ({entry.left}, {entry.right}) out of range for dimension {block.dim}")
            if key in tensor:
                raise BadSpecError(f"Bracket ({entry.left}, {entry.right}) given twice")
            if len(entry.value) != block.dim:
                raise BadSpecError(f"Bracket ({entry.left}, {entry.right}) needs {block.dim} coordinates")
            tensor[key] = [field.parse_value(x) for x in entry.value]
        return LeibnizAlgebra(field, block.dim, tensor)

    @classmethod
    def from_algebra(cls, algebra: Union[CyclicAlgebra, LeibnizAlgebra]) -> "SpecFile":
        if isinstance(algebra, CyclicAlgebra):
            return cls(field=algebra.field, algebra=CyclicBlock(n=algebra.n, alpha=algebra.spec.alpha_strings()))
        field = algebra.field
        brackets = [
            BracketEntry(left=i + 1, right=j + 1, value=[field.format_value(x) for x in value])
            for (i, j), value in sorted(algebra.tensor.items())
        ]
        return cls(field=field, algebra=TableBlock(dim=algebra.dim, brackets=brackets))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SpecFile":
        return cls.model_validate_json(_read(path))

    def dumps(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)

    def dump(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps() + "\n", encoding="utf-8")


class MapFile(_Base):
    """``{"matrix": [[...], ...]}``; column j holds the image of the j-th basis vector."""

    matrix: List[List[str]]

    def to_matrix(self, field: FieldDescriptor) -> Matrix:
        if not self.matrix:
            raise InvalidInputError("Map file has an empty matrix")
        return Matrix(field, self.matrix)

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "MapFile":
        return cls(matrix=matrix.text_rows())

    @classmethod
    def load(cls, path: Union[str, Path]) -> "MapFile":
        return cls.model_validate_json(_read(path))

    def dumps(self) -> str:
        return self.model_dump_json(indent=2)


def _read(path: Union[str, Path]) -> str:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"Cannot read {path}: {e.strerror}")
    try:
        json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{path} is not valid JSON: {e.msg} (line {e.lineno})")
    log.debug("Read %s (%s bytes)", path, len(text))
    return text

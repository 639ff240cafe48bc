"""
Modèles pydantic du format de fichier des théories.

Les clés inconnues sont conservées telles quelles (extra="allow") : un
fichier peut porter des données destinées à d'autres outils.
"""
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import SchemaError, UnsupportedItem

_TAGS = ("type.ax", "def.ax", "thm.ax", "def", "thm")
# Étiquettes connues mais non prises en charge
UNSUPPORTED_TAGS = ("type.ind", "def.ind", "def.pred")

# Clés omises à l'écriture quand elles valent None
_OPTIONAL_KEYS = ("th", "attributes", "num_gaps")


class _Model(BaseModel):
    model_config = ConfigDict(extra="allow")


class ProofItemModel(_Model):
    """Élément de preuve : {"id", "rule", "args", "prevs", "th"?}."""
    id: str
    rule: str
    args: str = ""
    prevs: List[str] = Field(default_factory=list)
    th: Optional[str] = None


class TypeAxItem(_Model):
    ty: Literal["type.ax"]
    name: str
    arity: int = Field(..., ge=0)


class ConstAxItem(_Model):
    ty: Literal["def.ax"]
    name: str
    type: str


class AxiomItem(_Model):
    ty: Literal["thm.ax"]
    name: str
    vars: Dict[str, str] = Field(default_factory=dict)
    prop: str


class DefItem(_Model):
    ty: Literal["def"]
    name: str
    type: str
    prop: str


class TheoremItem(_Model):
    ty: Literal["thm"]
    name: str
    vars: Dict[str, str] = Field(default_factory=dict)
    prop: str
    proof: List[ProofItemModel] = Field(default_factory=list)
    attributes: Optional[List[str]] = None
    num_gaps: Optional[int] = Field(None, ge=0)


TheoryItem = Annotated[
    Union[TypeAxItem, ConstAxItem, AxiomItem, DefItem, TheoremItem],
    Field(discriminator="ty"),
]


class TheoryFile(_Model):
    """Document complet : {"name", "imports", "content"}."""
    name: str
    imports: List[str] = Field(default_factory=list)
    content: List[TheoryItem] = Field(default_factory=list)


def parse_document(data: Any) -> TheoryFile:
    """
    Valide un document JSON déjà décodé.

    Raises:
        UnsupportedItem: élément de type inductif
        SchemaError: document non conforme (chemin de la première erreur)
    """
    if isinstance(data, dict) and isinstance(data.get("content"), list):
        for index, item in enumerate(data["content"]):
            if isinstance(item, dict) and item.get("ty") in UNSUPPORTED_TAGS:
                raise UnsupportedItem(item["ty"], index)
    try:
        return TheoryFile.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        # la discrimination ajoute l'étiquette au chemin : content.3.thm.prop
        path = [
            element for element in error["loc"]
            if not (isinstance(element, str) and element in _TAGS)
        ]
        raise SchemaError(error["msg"], path) from e


def _drop_none(data: Dict[str, Any]) -> Dict[str, Any]:
    for key in _OPTIONAL_KEYS:
        if key in data and data[key] is None:
            del data[key]
    return data


def document_to_dict(doc: TheoryFile) -> Dict[str, Any]:
    """Forme JSON canonique : clés dans l'ordre des champs, puis les clés inconnues."""
    data = doc.model_dump(mode="json")
    for item in data["content"]:
        _drop_none(item)
        for step in item.get("proof", ()):
            _drop_none(step)
    return data

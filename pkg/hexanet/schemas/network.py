from pydantic import BaseModel, Field
from typing import Dict, List, Optional

from ..services.minors import FaceConvention
from ..services.networks import Network
from ..services.scalars import RING_RANK, Ring, format_scalar, parse_scalar
from ..services.tilings import Tile, Tiling, format_subset, parse_subset


class TileSchema(BaseModel):
    i: int = Field(ge=1)
    j: int = Field(ge=2)
    base: str = Field(..., pattern=r"^\{[0-9,]*\}$")


class TilingSchema(BaseModel):
    n: int = Field(ge=1)
    tiles: List[TileSchema] = []

    class Config:
        from_attributes = True

    @classmethod
    def from_tiling(cls, t: Tiling) -> "TilingSchema":
        return cls(n=t.n, tiles=[TileSchema(i=x.i, j=x.j, base=format_subset(x.base)) for x in t.tiles])

    def to_tiling(self) -> Tiling:
        return Tiling.from_tiles(self.n, (Tile(x.i, x.j, parse_subset(x.base)) for x in self.tiles))


class NetworkSchema(BaseModel):
    tiling: TilingSchema
    vertices: Dict[str, str]
    faces: Dict[str, str] = {}
    convention: FaceConvention = FaceConvention.ODD
    ring: Optional[Ring] = None

    class Config:
        from_attributes = True

    @classmethod
    def from_network(cls, net: Network) -> "NetworkSchema":
        return cls(
            tiling=TilingSchema.from_tiling(net.tiling),
            vertices={format_subset(v): format_scalar(x) for v, x in net.values() if isinstance(v, frozenset)},
            faces={format_subset(p): format_scalar(x) for p, x in sorted(net.faces.items())},
            convention=net.convention,
            ring=net.ring,
        )

    def to_network(self) -> Network:
        vertices = {parse_subset(k): parse_scalar(v) for k, v in self.vertices.items()}
        faces = {}
        for key, value in self.faces.items():
            pair = sorted(parse_subset(key))
            if len(pair) != 2:
                raise ValueError(f"face key {key!r} is not a pair")
            faces[(pair[0], pair[1])] = parse_scalar(value)
        ring = self.ring or max((x.ring for x in list(vertices.values()) + list(faces.values())), key=RING_RANK.get)
        return Network(
            self.tiling.to_tiling(),
            {k: x.embed(ring) for k, x in vertices.items()},
            {k: x.embed(ring) for k, x in faces.items()},
            self.convention,
        )

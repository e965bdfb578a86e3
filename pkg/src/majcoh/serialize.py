"""JSON wire formats for states, density matrices, channels, profiles,
T-transform chains, and synthesis plans.

All numbers are IEEE doubles written as decimal text.  Complex scalars are
``[re, im]`` pairs; a matrix is a list of rows of such pairs.  Output
floats are rounded to 15 significant digits so identical inputs always
produce byte-identical output.

  state:    {"dim": d, "amplitudes": [[re, im], ...]}
  density:  {"dim": d, "rows": [[[re, im], ...], ...]}
  channel:  {"dim_in": d, "dim_out": d, "kraus": [<matrix>, ...]}
  profile:  [p1, p2, ...]
  chain:    [{"i": ..., "j": ..., "t": ...}, ...]   (0-based indices)
  plan:     {"chain": <chain>, "pre_unitary": <matrix>, "post_unitary": <matrix>}
"""

from __future__ import annotations

import json
from typing import Any, List, Sequence

import numpy as np

from .channels import Channel
from .majorization import TTransform
from .states import DensityMatrix, ProbabilityProfile, PureState
from .synthesis import SynthesisPlan
from .tolerances import DEFAULT_TOL, ToleranceConfig


def _round15(x: float) -> float:
    return float(f"{float(x):.15g}")


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        return _round15(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def dumps(obj: Any, pretty: bool = False) -> str:
    """Serialize to JSON with the 15-significant-digit float policy."""
    rounded = _round_floats(obj)
    if pretty:
        return json.dumps(rounded, indent=2, sort_keys=False)
    return json.dumps(rounded, separators=(",", ":"))


def _require(data: dict, field: str, kind: type) -> Any:
    if not isinstance(data, dict) or field not in data:
        raise ValueError(f"{field}: missing field")
    value = data[field]
    if kind is float and isinstance(value, int):
        value = float(value)
    if not isinstance(value, kind):
        raise ValueError(f"{field}: expected {kind.__name__}")
    return value


def complex_pair(z: complex) -> List[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _parse_complex(pair: Any, field: str) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"{field}: expected an [re, im] pair")
    re, im = pair
    if not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
        raise ValueError(f"{field}: entries must be numbers")
    return complex(re, im)


def matrix_to_json(m: np.ndarray) -> list:
    return [[complex_pair(z) for z in row] for row in np.asarray(m, dtype=complex)]


def matrix_from_json(rows: Any, field: str = "rows") -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise ValueError(f"{field}: expected a nonempty list of rows")
    parsed = []
    width = None
    for r, row in enumerate(rows):
        if not isinstance(row, list):
            raise ValueError(f"{field}[{r}]: expected a list")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"{field}[{r}]: ragged row")
        parsed.append([_parse_complex(z, f"{field}[{r}]") for z in row])
    return np.array(parsed, dtype=complex)


def state_to_json(s: PureState) -> dict:
    return {"dim": s.dim, "amplitudes": [complex_pair(z) for z in s.amplitudes]}


def state_from_json(data: Any, tol: ToleranceConfig = DEFAULT_TOL) -> PureState:
    dim = _require(data, "dim", int)
    raw = _require(data, "amplitudes", list)
    if len(raw) != dim:
        raise ValueError(f"amplitudes: got {len(raw)} entries for dim {dim}")
    amps = [_parse_complex(z, "amplitudes") for z in raw]
    return PureState(amps, tol)


def density_to_json(rho: DensityMatrix) -> dict:
    return {"dim": rho.dim, "rows": matrix_to_json(rho.matrix)}


def density_from_json(data: Any, tol: ToleranceConfig = DEFAULT_TOL) -> DensityMatrix:
    dim = _require(data, "dim", int)
    m = matrix_from_json(_require(data, "rows", list))
    if m.shape != (dim, dim):
        raise ValueError(f"rows: matrix shape {m.shape} does not match dim {dim}")
    return DensityMatrix(m, tol)


def observable_matrix_from_json(data: Any) -> np.ndarray:
    dim = _require(data, "dim", int)
    m = matrix_from_json(_require(data, "rows", list))
    if m.shape != (dim, dim):
        raise ValueError(f"rows: matrix shape {m.shape} does not match dim {dim}")
    return m


def channel_to_json(ch: Channel) -> dict:
    return {
        "dim_in": ch.dim_in,
        "dim_out": ch.dim_out,
        "kraus": [matrix_to_json(k) for k in ch.kraus],
    }


def kraus_from_json(data: Any) -> List[np.ndarray]:
    """Parse the Kraus list of a channel document without imposing the
    completeness invariant (used when auditing a stored channel)."""
    dim_in = _require(data, "dim_in", int)
    dim_out = _require(data, "dim_out", int)
    raw = _require(data, "kraus", list)
    if not raw:
        raise ValueError("kraus: need at least one operator")
    ops = []
    for n, mat in enumerate(raw):
        m = matrix_from_json(mat, field=f"kraus[{n}]")
        if m.shape != (dim_out, dim_in):
            raise ValueError(f"kraus[{n}]: shape {m.shape} does not match ({dim_out}, {dim_in})")
        ops.append(m)
    return ops


def channel_from_json(data: Any, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    return Channel(kraus_from_json(data), tol)


def profile_to_json(p: ProbabilityProfile) -> list:
    return [float(e) for e in p.entries]


def profile_from_json(data: Any, tol: ToleranceConfig = DEFAULT_TOL) -> ProbabilityProfile:
    if not isinstance(data, list) or not data:
        raise ValueError("profile: expected a nonempty JSON array of numbers")
    if not all(isinstance(x, (int, float)) for x in data):
        raise ValueError("profile: entries must be numbers")
    return ProbabilityProfile(np.asarray(data, dtype=float), tol)


def chain_to_json(chain: Sequence[TTransform]) -> list:
    return [{"i": tr.i, "j": tr.j, "t": float(tr.t)} for tr in chain]


def chain_from_json(data: Any) -> List[TTransform]:
    if not isinstance(data, list):
        raise ValueError("chain: expected a JSON array")
    out = []
    for item in data:
        i = _require(item, "i", int)
        j = _require(item, "j", int)
        t = _require(item, "t", float)
        out.append(TTransform(i, j, float(t)))
    return out


def plan_to_json(plan: SynthesisPlan) -> dict:
    return {
        "chain": chain_to_json(plan.chain),
        "pre_unitary": matrix_to_json(plan.pre_unitary),
        "post_unitary": matrix_to_json(plan.post_unitary),
    }


def load_state_or_profile(data: Any, tol: ToleranceConfig = DEFAULT_TOL) -> ProbabilityProfile:
    """Accept either a profile array or a state document and return the
    profile (squared moduli for states)."""
    if isinstance(data, list):
        return profile_from_json(data, tol)
    if isinstance(data, dict) and "amplitudes" in data:
        from .states import profile as state_profile

        return state_profile(state_from_json(data, tol), tol)
    raise ValueError("input: expected a profile array or a state object with 'amplitudes'")


def load_density_or_state(data: Any, tol: ToleranceConfig = DEFAULT_TOL) -> DensityMatrix:
    """Accept either a density-matrix document or a pure-state document
    (promoted to its projector)."""
    if isinstance(data, dict) and "rows" in data:
        return density_from_json(data, tol)
    if isinstance(data, dict) and "amplitudes" in data:
        return DensityMatrix.from_pure(state_from_json(data, tol), tol)
    raise ValueError("input: expected an object with 'rows' or 'amplitudes'")

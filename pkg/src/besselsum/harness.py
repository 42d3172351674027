"""Comparison harness: full decompositions, a-grid scans, slope fits, output.

``compare_run`` evaluates one (nu, p, a) both ways and reports the observed
remainder r_obs = oracle - H - series_total next to the predicted one.  The
retained k-count is sized from the reported far-k tail bound so that the
dropped power-law tail cannot contaminate r_obs (the exponentially small
signal is easily buried otherwise); the rule is deterministic, so repeated
runs are byte-identical.
"""
from __future__ import annotations

import io
import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import InsufficientDataError, DomainError
from .expansion import (
    AlgebraicSeries,
    TruncationPlan,
    algebraic_series,
    default_plan,
    h_part,
    sin_ratio_prefactor,
    _k_tail_bound,
    x_scale,
)
from .remainder import remainder_leading, remainder_theorem2
from .sums import OracleResult, SumParams, direct_sum

_K_LADDER = (8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096)
_PRED_K = 2  # remainder k-sum cut; k >= 2 is doubly exponentially smaller

CSV_COLUMNS = ("a", "X_1", "N_1", "r_obs", "r_pred", "ratio",
               "sign_obs", "sign_pred", "oracle_terms", "tail_bound")


@dataclass(frozen=True)
class EvalBreakdown:
    params: SumParams
    oracle: OracleResult
    h: float
    series_total: float
    per_k: Sequence[float]
    r_pred: float
    r_obs: float
    ratio: float
    X_1: float
    plan: TruncationPlan
    k_tail_bound: float
    degraded: bool


@dataclass(frozen=True)
class ScanRow:
    a: float
    X_1: float
    N_1: int
    r_obs: float
    r_pred: float
    ratio: float
    sign_obs: int
    sign_pred: int
    oracle_terms: int
    tail_bound: float
    degraded: bool = False


def _choose_k(params: SumParams, requested: int | None, r_scale: float) -> int:
    if requested is not None:
        return requested
    pref = sin_ratio_prefactor(params.nu, params.p)
    target = max(0.02 * abs(r_scale), 1e-305)
    for k in _K_LADDER:
        if _k_tail_bound(params, k, pref) <= target:
            return k
    return _K_LADDER[-1]


def _predict(params: SumParams, k: int, m_terms: int, predictor: str):
    from .expansion import optimal_truncation

    n_k, alpha_k = optimal_truncation(params, k)
    if predictor == "theorem2":
        return remainder_theorem2(params, k, n_k, m_terms)
    return remainder_leading(params, k, n_k, alpha_k, m_terms)


def compare_run(params: SumParams, *, K: int | None = None, M: int = 1,
                rel_tol: float = 1e-13, predictor: str = "auto",
                skip_oracle: bool = False) -> EvalBreakdown:
    """Full decomposition of one evaluation.

    Deterministic given (params, keyword config).  ``predictor`` is
    'leading' (closed forms, p <= 5), 'theorem2', or 'auto'.
    """
    if predictor == "auto":
        predictor = "leading" if params.p <= 5 else "theorem2"
    if predictor not in ("leading", "theorem2"):
        raise DomainError(f"unknown predictor {predictor!r}")

    preds = []
    for k in range(1, _PRED_K + 1):
        preds.append(_predict(params, k, M, predictor))
    r_pred = math.fsum(p.value / (i + 1) for i, p in enumerate(preds))

    k_count = _choose_k(params, K, r_pred if r_pred != 0.0 else 1.0)
    plan = default_plan(params, K=k_count, M=M)
    series = algebraic_series(params, plan)
    h = h_part(params).value
    x1 = x_scale(params, 1)

    if skip_oracle:
        oracle = OracleResult(math.nan, 0, math.nan, math.nan)
        r_obs = math.nan
        ratio = math.nan
        degraded = False
    else:
        oracle = direct_sum(params, rel_tol)
        r_obs = oracle.value - h - series.total
        ratio = r_obs / r_pred if r_pred != 0.0 else math.nan
        degraded = oracle.rel_tol_achieved > rel_tol

    return EvalBreakdown(
        params=params,
        oracle=oracle,
        h=h,
        series_total=series.total,
        per_k=series.per_k,
        r_pred=r_pred,
        r_obs=r_obs,
        ratio=ratio,
        X_1=x1,
        plan=plan,
        k_tail_bound=series.k_tail_bound,
        degraded=degraded,
    )


def row_from_breakdown(bd: EvalBreakdown) -> ScanRow:
    return ScanRow(
        a=bd.params.a,
        X_1=bd.X_1,
        N_1=bd.plan.N[0],
        r_obs=bd.r_obs,
        r_pred=bd.r_pred,
        ratio=bd.ratio,
        sign_obs=_sign(bd.r_obs),
        sign_pred=_sign(bd.r_pred),
        oracle_terms=bd.oracle.terms_used,
        tail_bound=bd.oracle.tail_bound,
        degraded=bd.degraded,
    )


def _sign(x: float) -> int:
    if math.isnan(x) or x == 0.0:
        return 0
    return 1 if x > 0.0 else -1


def _scan_point(job):
    nu, p, a, kwargs = job
    return row_from_breakdown(compare_run(SumParams(nu, p, a), **kwargs))


def geometric_grid(a_start: float, a_stop: float, points: int) -> list[float]:
    if not (a_start > a_stop > 0.0):
        raise DomainError("need a_start > a_stop > 0")
    if points < 3:
        raise DomainError("need at least 3 grid points")
    ratio = a_stop / a_start
    return [a_start * ratio ** (i / (points - 1)) for i in range(points)]


def scan_grid(nu: float, p: int, a_start: float, a_stop: float, points: int,
              *, grid: str = "geometric", workers: int = 1,
              **compare_kwargs) -> list[ScanRow]:
    """One compare_run per grid point, ordered by descending a (and hence
    strictly increasing X_1).  Worker count never changes the values."""
    if grid != "geometric":
        raise DomainError(f"unknown grid kind {grid!r}")
    avals = geometric_grid(a_start, a_stop, points)
    jobs = [(nu, p, a, compare_kwargs) for a in avals]
    if workers <= 1:
        return [_scan_point(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_scan_point, jobs))


def usable_rows(rows: Sequence[ScanRow]) -> list[ScanRow]:
    """Rows whose observed remainder stands clear of the oracle noise floor."""
    return [r for r in rows
            if r.r_obs != 0.0 and not math.isnan(r.r_obs)
            and abs(r.r_obs) > 1e3 * r.tail_bound]


def envelope_rows(rows: Sequence[ScanRow]) -> list[ScanRow]:
    """Interior local maxima of |r_obs| (the oscillation arch tops)."""
    out = []
    for i in range(1, len(rows) - 1):
        m = abs(rows[i].r_obs)
        if m >= abs(rows[i - 1].r_obs) and m >= abs(rows[i + 1].r_obs):
            out.append(rows[i])
    return out


def slope_fit(rows: Sequence[ScanRow], envelope: str = "auto") -> tuple[float, float]:
    """Least-squares slope of ln|r_obs| against X_1.

    Sign-changing (oscillatory) data is reduced to its magnitude envelope
    first; 'auto' applies that exactly when the usable rows change sign.
    """
    rows = usable_rows(rows)
    if len(rows) < 4:
        raise InsufficientDataError(
            f"need >= 4 usable rows for a slope fit, have {len(rows)}")
    use_env = (envelope == "always"
               or (envelope == "auto"
                   and len({_sign(r.r_obs) for r in rows}) > 1))
    if use_env:
        env = envelope_rows(rows)
        if len(env) >= 3:
            rows = env
    xs = [r.X_1 for r in rows]
    ys = [math.log(abs(r.r_obs)) for r in rows]
    fit = statistics.linear_regression(xs, ys)
    n = len(xs)
    xbar = math.fsum(xs) / n
    sxx = math.fsum((x - xbar) ** 2 for x in xs)
    if n > 2:
        resid = math.fsum((y - fit.slope * x - fit.intercept) ** 2
                          for x, y in zip(xs, ys))
        stderr = math.sqrt(resid / (n - 2) / sxx)
    else:
        stderr = 0.0
    return fit.slope, stderr


# ---------------------------------------------------------------------------
# rendering

def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


def render_rows_csv(rows: Sequence[ScanRow]) -> bytes:
    if not rows:
        raise DomainError("no rows to render")
    buf = io.StringIO()
    buf.write(",".join(CSV_COLUMNS) + "\n")
    for r in rows:
        buf.write(",".join((
            _fmt(r.a), _fmt(r.X_1), str(r.N_1), _fmt(r.r_obs), _fmt(r.r_pred),
            _fmt(r.ratio), str(r.sign_obs), str(r.sign_pred),
            str(r.oracle_terms), _fmt(r.tail_bound))) + "\n")
    return buf.getvalue().encode("utf-8")


def parse_rows_csv(data: bytes) -> list[ScanRow]:
    lines = data.decode("utf-8").strip().split("\n")
    if not lines or lines[0].split(",") != list(CSV_COLUMNS):
        raise DomainError("unrecognized CSV header")
    rows = []
    for line in lines[1:]:
        f = line.split(",")
        rows.append(ScanRow(
            a=float(f[0]), X_1=float(f[1]), N_1=int(f[2]), r_obs=float(f[3]),
            r_pred=float(f[4]), ratio=float(f[5]), sign_obs=int(f[6]),
            sign_pred=int(f[7]), oracle_terms=int(f[8]), tail_bound=float(f[9])))
    return rows


def _jsonable(obj):
    if isinstance(obj, float):
        return None if not math.isfinite(obj) else float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def render_json(payload) -> bytes:
    """JSON with every float round-tripped through 17 significant digits."""
    if payload is None or payload == [] :
        raise DomainError("nothing to render")
    if isinstance(payload, EvalBreakdown):
        payload = asdict(payload)
    elif isinstance(payload, (list, tuple)):
        payload = [asdict(r) if not isinstance(r, dict) else r for r in payload]
    return (json.dumps(_jsonable(payload), indent=2, allow_nan=False) + "\n").encode("utf-8")


def breakdown_from_json(data: bytes) -> EvalBreakdown:
    d = json.loads(data.decode("utf-8"))

    def _f(v):
        return math.nan if v is None else v

    oracle = d["oracle"]
    return EvalBreakdown(
        params=SumParams(**d["params"]),
        oracle=OracleResult(_f(oracle["value"]), oracle["terms_used"],
                            _f(oracle["tail_bound"]),
                            _f(oracle["rel_tol_achieved"])),
        h=d["h"],
        series_total=d["series_total"],
        per_k=tuple(d["per_k"]),
        r_pred=d["r_pred"],
        r_obs=_f(d["r_obs"]),
        ratio=_f(d["ratio"]),
        X_1=d["X_1"],
        plan=TruncationPlan(d["plan"]["K"], tuple(d["plan"]["N"]),
                            d["plan"]["M"], tuple(d["plan"]["alpha"])),
        k_tail_bound=d["k_tail_bound"],
        degraded=d["degraded"],
    )

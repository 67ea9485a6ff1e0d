"""
Kac-Moody Eisenstein 급수 계산 CLI

사용법:
    python -m app.cli constant-term --m 3 --nu 3,3 --a 2,2 --max-length 20
    python -m app.cli weyl --m 3 --action --max-length 6
    python -m app.cli scan --m 3 --cuspidal --s-from -2.5 --s-to -1.0 --step 0.1 --a 2,2

보고서는 표준 출력, 로그와 오류 객체는 표준 에러로 나간다.
"""

from typing import Any, Literal
import argparse
import logging
import math
import sys

from pydantic import BaseModel, Field, ValidationError

from app.cli.report import render
from app.cli.utils import EXIT_USAGE, frange, handle_errors, parse_complex, parse_pair, parse_positive_pair
from app.config import CliDefaults, Precision
from app.rootsys.cartan import (
    ALPHA1,
    ALPHA2,
    CartanData,
    TorusPoint,
    Weight,
    is_real_root,
    new_cartan,
    norm,
    real_roots_in_box,
)
from app.series.cuspidal import convergence_threshold, cuspidal_constant_term, iwasawa_D
from app.series.explorer import scan_convergence
from app.series.fourier import fourier_coeff, generic_fourier_coeff
from app.series.constant_term import constant_term
from app.specfun.bessel import bessel_k
from app.specfun.arith import divisor_power_sum
from app.specfun.gamma_zeta import xi, zeta_fn
from app.specfun.whittaker import euler_product_whittaker, whittaker_global, whittaker_inf, whittaker_inf_quadrature
from app.weyl.action import (
    act,
    act_by_reflections,
    inversion_set,
    rho_minus_inverse_rho,
    rho_shift_by_reflections,
    w_rho_shift,
)
from app.weyl.group import enumerate_W, reduced_word


logger = logging.getLogger(__name__)

MAX_LENGTH_LIMIT = 200


class RunConfig(BaseModel):
    m: int = Field(ge=3)
    command: Literal["roots", "weyl", "specfun-check", "constant-term", "fourier", "cuspidal", "scan"]
    params: dict[str, Any]
    output_format: Literal["json", "csv"] = "json"
    rel_tol: float = Field(gt=0.0, le=1e-3)
    max_length: int = Field(default=20, ge=0, le=MAX_LENGTH_LIMIT)
    workers: int = Field(default=1, ge=1)


class UsageExitParser(argparse.ArgumentParser):
    """잘못된 플래그에 대해 usage 를 출력하고 64 로 종료"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser(defaults: CliDefaults, precision: Precision) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=3, help="Cartan 행렬 비대각 성분의 절댓값 (m ≥ 3)")
    common.add_argument("--format", dest="output_format", choices=["json", "csv"], default=defaults.output_format)
    common.add_argument("--rel-tol", type=float, default=precision.rel_tol, help="목표 상대 오차 (EISEN_REL_TOL)")
    common.add_argument("--workers", type=int, default=defaults.workers, help="항 계산 스레드 수")
    common.add_argument("--max-length", type=int, default=defaults.max_length, help="Weyl 길이 절단")

    parser = UsageExitParser(prog="python -m app.cli", description="rank 2 hyperbolic Kac-Moody Eisenstein 급수 계산기")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageExitParser)

    roots = sub.add_parser("roots", parents=[common], help="좌표 상자 안의 실근 목록")
    roots.add_argument("--bound", type=int, default=30)

    weyl = sub.add_parser("weyl", parents=[common], help="닫힌 꼴과 반사 합성 오라클 비교")
    weyl.add_argument("--action", action="store_true", help="wα_i 비교")
    weyl.add_argument("--rho", action="store_true", help="wρ - ρ 비교")
    weyl.add_argument("--inversions", action="store_true", help="inversion set 크기와 합 검사")

    sub.add_parser("specfun-check", parents=[common], help="특수함수 오라클 검사")

    const = sub.add_parser("constant-term", parents=[common], help="상수항 E♯_ν(a)")
    const.add_argument("--nu", type=parse_pair, required=True, help="ν 의 α-기저 좌표 s1,s2")
    const.add_argument("--a", type=parse_positive_pair, required=True, help="토러스 좌표 x1,x2")

    fourier = sub.add_parser("fourier", parents=[common], help="퇴화 Fourier 계수 E_{ν,ψ_(i,n)}(a)")
    fourier.add_argument("--i", type=int, choices=[1, 2], default=1)
    fourier.add_argument("--n", type=int, default=1)
    fourier.add_argument("--nu", type=parse_pair, required=True)
    fourier.add_argument("--a", type=parse_positive_pair, required=True)
    fourier.add_argument("--generic", action="store_true", help="일반 지표 (항등적으로 0)")

    cusp = sub.add_parser("cuspidal", parents=[common], help="첨점 상수항 E♯_s(a)")
    cusp.add_argument("--s", type=parse_complex, required=True, help="s 또는 re,im")
    cusp.add_argument("--a", type=parse_positive_pair, required=True)
    cusp.add_argument("--force", action="store_true", help="Re s ≥ -2 에서도 계산")

    scan = sub.add_parser("scan", parents=[common], help="수렴 영역 탐색")
    scan.add_argument("--cuspidal", action="store_true")
    scan.add_argument("--s-from", type=float, required=True)
    scan.add_argument("--s-to", type=float, required=True)
    scan.add_argument("--step", type=float, default=0.25)
    scan.add_argument("--a", type=parse_positive_pair, required=True)
    return parser


COMMON_KEYS = {"command", "m", "output_format", "rel_tol", "workers", "max_length"}


def _sum_report(result) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    row = {
        "value": result.value,
        "terms_used": result.terms_used,
        "max_length": result.max_length,
        "last_term_mag": result.last_term_mag,
        "tail_ratio": result.tail_ratio,
        "converged": result.converged,
    }
    return result.model_dump(), [row]


def cmd_roots(cd: CartanData, config: RunConfig, precision: Precision):
    bound = config.params["bound"]
    roots = sorted(
        (root for root in real_roots_in_box(cd, bound) if root.is_positive()),
        key=lambda r: (r.c1 + r.c2, r.c1),
    )
    rows = [{"c1": r.c1, "c2": r.c2, "norm": norm(cd, r), "real": is_real_root(cd, r)} for r in roots]
    return {"m": cd.m, "gamma": cd.gamma, "bound": bound, "count": len(rows), "roots": rows}, rows


def cmd_weyl(cd: CartanData, config: RunConfig, precision: Precision):
    params = config.params
    show_all = not (params["action"] or params["rho"] or params["inversions"])
    rows = []
    for w in enumerate_W(config.max_length):
        word = reduced_word(w)
        row: dict[str, Any] = {"w": str(w), "length": w.length}
        if show_all or params["action"]:
            for i, alpha in ((1, ALPHA1), (2, ALPHA2)):
                closed = act(cd, w, alpha)
                oracle = act_by_reflections(cd, word, alpha)
                row[f"w_alpha{i}"] = [closed.c1, closed.c2]
                row[f"w_alpha{i}_ok"] = closed == oracle
        if show_all or params["rho"]:
            closed = w_rho_shift(cd, w)
            oracle = rho_shift_by_reflections(cd, w)
            row["w_rho_minus_rho"] = [closed.s1, closed.s2]
            row["w_rho_ok"] = closed == oracle
        if show_all or params["inversions"]:
            roots = inversion_set(cd, w)
            total = Weight(sum(r.c1 for r in roots), sum(r.c2 for r in roots))
            row["inversions"] = len(roots)
            row["inversions_ok"] = len(roots) == w.length and total == rho_minus_inverse_rho(cd, w)
        rows.append(row)
    all_ok = all(value for row in rows for key, value in row.items() if key.endswith("_ok"))
    return {"m": cd.m, "max_length": config.max_length, "all_ok": all_ok, "rows": rows}, rows


def _check_row(name: str, params: str, value: complex, reference: complex, tol: float) -> dict[str, Any]:
    rel_err = abs(value - reference) / max(abs(reference), 1e-300)
    return {"check": name, "params": params, "value": value, "reference": reference, "rel_err": rel_err, "ok": rel_err <= tol}


def cmd_specfun_check(cd: CartanData, config: RunConfig, precision: Precision):
    rows = []
    for s in (0.2, 0.5, 0.8, 2, 3, 4, 5, 2 + 3j):
        rows.append(_check_row("xi_symmetry", f"s={s}", xi(s, precision), xi(1 - s, precision), 1e-9))
    rows.append(_check_row("zeta", "s=2", zeta_fn(2, precision), math.pi ** 2 / 6, 1e-10))
    for y in (0.5, 1.0, 2.0, 5.0):
        reference = math.sqrt(math.pi / (2 * y)) * math.exp(-y)
        rows.append(_check_row("bessel_k_half", f"y={y}", bessel_k(0.5, y, precision), reference, 1e-9))
    for n, y, s in ((1, 1.0, 3.0), (1, 0.5, 2.5), (2, 0.3, 4.0)):
        rows.append(
            _check_row(
                "whittaker_inf_quadrature",
                f"n={n},y={y},s={s}",
                whittaker_inf(n, y, s, precision),
                whittaker_inf_quadrature(n, y, s),
                1e-6,
            )
        )
    for n in (1, 6, 12):
        for s in (2.5, 3.0):
            reference = divisor_power_sum(1 - s, n) / zeta_fn(s, precision)
            rows.append(_check_row("euler_product", f"n={n},s={s}", euler_product_whittaker(n, s, 10_000), reference, 1e-5))
    for n, y, s in ((6, 0.5, 2.5), (1, 1.0, 3.0)):
        product_form = whittaker_inf(n, y, s, precision) * euler_product_whittaker(n, s, 10_000)
        rows.append(
            _check_row("whittaker_global", f"n={n},y={y},s={s}", whittaker_global(n, y, s, precision), product_form, 1e-5)
        )
    return {"all_ok": all(row["ok"] for row in rows), "rows": rows}, rows


def cmd_constant_term(cd: CartanData, config: RunConfig, precision: Precision):
    nu = Weight(*config.params["nu"])
    a = TorusPoint(*config.params["a"])
    result = constant_term(cd, nu, a, precision, config.max_length, config.workers)
    return _sum_report(result)


def cmd_fourier(cd: CartanData, config: RunConfig, precision: Precision):
    params = config.params
    nu = Weight(*params["nu"])
    a = TorusPoint(*params["a"])
    if params["generic"]:
        return _sum_report(generic_fourier_coeff(cd, nu, a, config.max_length))
    result = fourier_coeff(cd, params["i"], params["n"], nu, a, precision, config.max_length, config.workers)
    return _sum_report(result)


def cmd_cuspidal(cd: CartanData, config: RunConfig, precision: Precision):
    params = config.params
    a = TorusPoint(*params["a"])
    result = cuspidal_constant_term(
        cd, params["s"], a, precision, config.max_length, config.workers, force=params["force"]
    )
    report, rows = _sum_report(result)
    report["convergence_threshold"] = convergence_threshold(cd)
    report["iwasawa_D"] = iwasawa_D(cd)
    return report, rows


def cmd_scan(cd: CartanData, config: RunConfig, precision: Precision):
    params = config.params
    a = TorusPoint(*params["a"])
    grid = frange(params["s_from"], params["s_to"], params["step"])
    reports = scan_convergence(cd, grid, a, precision, config.max_length, params["cuspidal"], config.workers)
    rows = [
        {
            "point": point,
            "verdict": report.verdict,
            "last_partial_sum": report.partial_sums[-1][1] if report.partial_sums else None,
            "note": report.note,
        }
        for point, report in zip(grid, reports)
    ]
    return {"cuspidal": params["cuspidal"], "grid": grid, "reports": reports}, rows


HANDLERS = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "specfun-check": cmd_specfun_check,
    "constant-term": cmd_constant_term,
    "fourier": cmd_fourier,
    "cuspidal": cmd_cuspidal,
    "scan": cmd_scan,
}


@handle_errors()
def run(config: RunConfig, precision: Precision | None = None) -> int:
    if precision is None:
        precision = Precision.from_env()
    precision = Precision(
        rel_tol=config.rel_tol,
        quad_levels=precision.quad_levels,
        euler_maclaurin_N=precision.euler_maclaurin_N,
        euler_maclaurin_M=precision.euler_maclaurin_M,
    )
    cd = new_cartan(config.m)
    logger.info(f"{config.command} 실행: m={config.m}, γ={cd.gamma:.10f}")
    report, rows = HANDLERS[config.command](cd, config, precision)
    sys.stdout.write(render(report, rows, config.output_format))
    if config.output_format == "json":
        sys.stdout.write("\n")
    return 0


def parse_config(argv: list[str] | None = None) -> RunConfig:
    defaults = CliDefaults.from_env()
    precision = Precision.from_env()
    parser = build_parser(defaults, precision)
    args = vars(parser.parse_args(argv))
    if args["command"] == "scan" and not args["step"] > 0:
        parser.error(f"--step 은 양수여야 합니다: {args['step']}")
    try:
        return RunConfig(
            m=args["m"],
            command=args["command"],
            params={key: value for key, value in args.items() if key not in COMMON_KEYS},
            output_format=args["output_format"],
            rel_tol=args["rel_tol"],
            max_length=args["max_length"],
            workers=args["workers"],
        )
    except ValidationError as e:
        parser.error("; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors()))


@handle_errors()
def main(argv: list[str] | None = None) -> int:
    defaults = CliDefaults.from_env()
    logging.basicConfig(
        level=defaults.log_level,
        format='%(asctime)s - %(threadName)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler()],
    )
    config = parse_config(argv)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

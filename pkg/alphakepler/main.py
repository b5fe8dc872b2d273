import json
import time
from importlib import metadata
from operator import itemgetter
from pathlib import Path

from .action_angle import (
    ACTION_ANGLE_HEADER,
    ACTIONS_HEADER,
    ActionAngleState,
    action_angle_table,
    action_drifts,
    actions_along,
    actions_table,
    integrate_action_flow,
    linear_flow_report,
)
from .campaign import Campaign
from .equatorial import (
    EQUATORIAL_HEADER,
    equatorial_conservation_report,
    equatorial_table,
    integrate_equatorial,
)
from .error import IdentityCode
from .explain import explain
from .kepler import (
    TRAJECTORY_HEADER,
    KeplerParams,
    Trajectory,
    conservation_report,
    integrate_orbit,
    trajectory_table,
)
from .loader import load_checks
from .output import dumps, write_csv, write_json
from .report import CampaignResult, VerificationReport
from .settings import Settings, load_settings


def usage() -> None:
    print(
        """\
usage: alphakepler verify [--config file] [--out dir] [--seed n] [--json]
                          [--alpha a] [--m m] [--k k] [--n-points n]
                          [--rel-tol tol] [--method method] [--enable id]
                          [--disable id] [--enable-all] [--disable-all]
                          [--load module] [--timing-stats file] [--verbose | -v]
       alphakepler simulate [--config file] [--out dir] [--mode mode]
                            [--state x1,x2,...] [--t-end t] [--json] ...
       alphakepler actions [--config file] [--out dir] [--mode mode]
                           [--state x1,x2,...] [--t-end t] [--json] ...
       alphakepler [--help | -h]
       alphakepler [--version]
       alphakepler --explain id

Command Line Options:

--help, -h            This help menu.
--version             Print version information.
--config file         Read the [tool.alphakepler] table of "file" instead of pyproject.toml.
--out dir             Directory for report, trajectory and action files (default: current).
--seed n              Unsigned 64-bit seed for point sampling (default: 0).
--json                Print a machine-readable summary on stdout.
--alpha a             Deformation parameter, alpha >= 1.
--m m                 Mass.
--k k                 Coupling constant of the potential.
--n-points n          Points sampled per identity (default: 100).
--rel-tol tol         Relative integrator tolerance in [1e-13, 1e-3] (default: 1e-10).
--method method       Integrator, "RK45" or "DOP853" (default: RK45).
--mode mode           State space: "cartesian", "equatorial" or "action-angle".
--state x1,x2,...     Initial state, 6 coordinates (cartesian) or 4 (otherwise).
--t-end t             Integration time.
--enable id           Run an identity which is disabled by default.
--disable id          Skip an identity which is enabled by default.
--enable-all          Run all identities by default.
--disable-all         Skip all identities by default.
--load module         Add a module to the list of paths searched for identities. Can be repeated.
--explain id          Print the explanation of an identity.
--quiet               Suppress the "--explain" suggestion when an identity fails.
--verbose             Increase verbosity.
--timing-stats file   Export timing information (as JSON) to file.
--no-color            Disable colored output.

Subcommands:

verify           Check every enabled identity and write report.json.
simulate         Integrate one orbit and write trajectory.csv and conservation.json.
actions          Map a bound orbit to actions and write actions.csv and actions.json.
"""
    )


def version() -> str:  # pragma: no cover
    alphakepler_version = metadata.version("alphakepler")
    numpy_version = metadata.version("numpy")
    scipy_version = metadata.version("scipy")

    return (
        f"alphakepler: v{alphakepler_version}\n"
        f"NumPy: v{numpy_version}\n"
        f"SciPy: v{scipy_version}"
    )


def get_params(settings: Settings) -> KeplerParams:
    settings.require("m", "k")

    assert settings.m is not None
    assert settings.k is not None

    return KeplerParams(settings.m, settings.k)


def build_campaign(settings: Settings) -> Campaign:
    settings.require("alpha", "m", "k")

    assert settings.alpha is not None

    return Campaign(
        alpha=settings.alpha,
        params=get_params(settings),
        n_points=settings.get_n_points(),
        seed=settings.get_seed(),
        rel_tol=settings.get_rel_tol(),
        method=settings.get_method(),
    )


def run_campaign(settings: Settings) -> tuple[CampaignResult, dict[str, int]]:
    campaign = build_campaign(settings)
    checks = load_checks(settings)

    result = CampaignResult()
    timing_stats_in_ms: dict[str, int] = {}

    start = time.time()

    for identity, check in checks:
        code = str(IdentityCode.from_identity(identity))

        if settings.verbose:
            print(f"Checking {code} ({identity.name})")

        check_start = time.time()

        check(campaign, result.reports)

        timing_stats_in_ms[code] = int((time.time() - check_start) * 1_000)

    result.duration = time.time() - start

    return result, timing_stats_in_ms


def format_with_color(report: VerificationReport) -> str:
    yellow = "\x1b[33m"
    gray = "\x1b[90m"
    green = "\x1b[92m"
    red = "\x1b[91m"
    reset = "\x1b[0m"

    verdict = f"{green}pass{reset}" if report.passed else f"{red}FAIL{reset}"

    return (
        f"{yellow}[{report.code or '?'}]{reset} {report.identity} "
        f"{gray}(alpha={report.alpha:g}){reset}: {verdict}, "
        f"residual {report.max_residual:.3e} {gray}tol {report.tol:.0e}{reset}"
    )


def format_reports(result: CampaignResult, settings: Settings) -> str:
    if not result.reports:
        return "No identities were checked"

    formatter = format_with_color if settings.color else str

    done = "\n".join(formatter(report) for report in result.reports)

    if not settings.quiet and not result.passed:
        done += "\n\nRun `alphakepler --explain ID` to further explain an identity. Use `--quiet` to silence this message"  # noqa: E501

    return done


def output_timing_stats(
    settings: Settings, total_time_spent: float, timing_stats_in_ms: dict[str, int]
) -> None:
    if not settings.timing_stats:
        return

    data = {
        "total_time_spent_in_ms": int(total_time_spent * 1_000),
        "time_spent_checking_identity_in_ms": dict(
            sorted(timing_stats_in_ms.items(), key=itemgetter(1), reverse=True)
        ),
    }

    settings.timing_stats.write_text(json.dumps(data, separators=(",", ":")))


def cmd_verify(settings: Settings) -> int:
    result, timing_stats_in_ms = run_campaign(settings)

    report_file = write_json(settings.get_out() / "report.json", result.to_json())
    output_timing_stats(settings, result.duration, timing_stats_in_ms)

    if settings.json:
        summary = {"pass": result.passed, "report": str(report_file), "reports": result.to_json()}

        print(dumps(summary), end="")

    else:
        print(format_reports(result, settings))

    return 0 if result.passed else 1


def _simulate_cartesian(settings: Settings) -> tuple[Trajectory, VerificationReport, Path]:
    settings.require("alpha", "initial_state", "t_end")

    assert settings.alpha is not None
    assert settings.initial_state is not None
    assert settings.t_end is not None

    params = get_params(settings)
    traj = integrate_orbit(
        settings.initial_state,
        params,
        settings.alpha,
        settings.t_end,
        settings.get_rel_tol(),
        method=settings.get_method(),
    )

    csv = write_csv(
        settings.get_out() / "trajectory.csv",
        TRAJECTORY_HEADER,
        trajectory_table(traj, params, settings.alpha),
    )

    return traj, conservation_report(traj, params, settings.alpha), csv


def _simulate_equatorial(settings: Settings) -> tuple[Trajectory, VerificationReport, Path]:
    settings.require("initial_state", "t_end")

    assert settings.initial_state is not None
    assert settings.t_end is not None

    params = get_params(settings)
    traj = integrate_equatorial(
        settings.initial_state,
        params,
        settings.t_end,
        settings.get_rel_tol(),
        method=settings.get_method(),
    )

    csv = write_csv(
        settings.get_out() / "trajectory.csv", EQUATORIAL_HEADER, equatorial_table(traj, params)
    )

    return traj, equatorial_conservation_report(traj, params), csv


def _simulate_action_angle(settings: Settings) -> tuple[Trajectory, VerificationReport, Path]:
    settings.require("initial_state", "t_end")

    assert settings.initial_state is not None
    assert settings.t_end is not None

    params = get_params(settings)
    state = ActionAngleState(*settings.initial_state, params=params)
    traj = integrate_action_flow(
        state, settings.t_end, settings.get_rel_tol(), method=settings.get_method()
    )

    csv = write_csv(
        settings.get_out() / "trajectory.csv",
        ACTION_ANGLE_HEADER,
        action_angle_table(traj, params),
    )

    return traj, linear_flow_report(traj, state), csv


def cmd_simulate(settings: Settings) -> int:
    settings.require("mode")

    if settings.mode == "equatorial":
        traj, report, csv = _simulate_equatorial(settings)

    elif settings.mode == "action-angle":
        traj, report, csv = _simulate_action_angle(settings)

    else:
        traj, report, csv = _simulate_cartesian(settings)

    summary = {
        "mode": settings.mode,
        "n_samples": len(traj),
        "t_final": float(traj.times[-1]),
        "events": [event.to_json() for event in traj.events],
        "conservation": report.to_json(),
    }

    write_json(settings.get_out() / "conservation.json", summary)

    if settings.json:
        print(dumps({**summary, "trajectory": str(csv)}), end="")

    else:
        print(f"{csv}: {len(traj)} sample(s) up to t = {traj.times[-1]:g}")

        for event in traj.events:
            print(f"event: {event.kind} of coordinate {event.index} at t = {event.t:g}")

        print(report)

    return 0


def cmd_actions(settings: Settings) -> int:
    settings.require("mode", "initial_state", "t_end")

    assert settings.initial_state is not None
    assert settings.t_end is not None

    params = get_params(settings)

    if settings.mode == "equatorial":
        traj = integrate_equatorial(
            settings.initial_state,
            params,
            settings.t_end,
            settings.get_rel_tol(),
            method=settings.get_method(),
        )
        rows = actions_along(traj, "equatorial", params)

    elif settings.mode == "cartesian":
        settings.require("alpha")

        assert settings.alpha is not None

        traj = integrate_orbit(
            settings.initial_state,
            params,
            settings.alpha,
            settings.t_end,
            settings.get_rel_tol(),
            method=settings.get_method(),
        )
        rows = actions_along(traj, "cartesian", params, settings.alpha)

    else:
        raise ValueError('alphakepler: "actions" maps equatorial or cartesian orbits only')

    csv = write_csv(settings.get_out() / "actions.csv", ACTIONS_HEADER, actions_table(traj, rows))

    drifts = action_drifts(rows)
    summary = {
        "mode": settings.mode,
        "n_samples": len(traj),
        "initial": dict(zip(ACTIONS_HEADER[1:], map(float, rows[0]), strict=True)),
        "max_drift": drifts,
        "events": [event.to_json() for event in traj.events],
    }

    write_json(settings.get_out() / "actions.json", summary)

    if settings.json:
        print(dumps({**summary, "actions": str(csv)}), end="")

    else:
        print(f"{csv}: {len(traj)} sample(s)")

        for name, drift in drifts.items():
            print(f"{name}: max relative drift {drift:.3e}")

    return 0


def main(args: list[str]) -> int:
    try:
        settings = load_settings(args)

    except ValueError as e:
        print(str(e))
        return 2

    if settings.help:
        usage()

        return 0

    if settings.version:
        print(version())

        return 0

    if settings.explain:
        print(explain(settings))

        return 0

    commands = {"verify": cmd_verify, "simulate": cmd_simulate, "actions": cmd_actions}

    if not settings.command:
        print("alphakepler: missing command, expected one of verify, simulate, actions")

        return 2

    try:
        return commands[settings.command](settings)

    except (TypeError, ValueError) as e:
        print(str(e))
        return 2

from __future__ import annotations

import math
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any, Literal, TypeVar

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

if sys.version_info >= (3, 11):
    import tomllib  # pragma: no cover
else:
    import tomli as tomllib  # pragma: no cover

from .error import IdentityCategory, IdentityClassifier, IdentityCode

Command = Literal["verify", "simulate", "actions"]
Mode = Literal["cartesian", "equatorial", "action-angle"]
Method = Literal["RK45", "DOP853"]

COMMANDS: tuple[Command, ...] = ("verify", "simulate", "actions")
MODES: tuple[Mode, ...] = ("cartesian", "equatorial", "action-angle")
METHODS: tuple[Method, ...] = ("RK45", "DOP853")

STATE_LENGTHS: dict[Mode, int] = {"cartesian": 6, "equatorial": 4, "action-angle": 4}

DEFAULT_REL_TOL = 1e-10
DEFAULT_N_POINTS = 100
REL_TOL_RANGE = (1e-13, 1e-3)
MAX_SEED = 2**64


T = TypeVar("T")


def _prefer(new: T | None, old: T | None) -> T | None:
    return new if new is not None else old


@dataclass
class Settings:
    command: Command | None = None
    mode: Mode | None = None
    alpha: float | None = None
    m: float | None = None
    k: float | None = None
    initial_state: list[float] | None = None
    t_end: float | None = None
    rel_tol: float | None = None
    method: Method | None = None
    n_points: int | None = None
    seed: int | None = None
    out: Path | None = None
    json: bool = False
    explain: IdentityCode | None = None
    load: list[str] = field(default_factory=list)
    enable: set[IdentityClassifier] = field(default_factory=set)
    disable: set[IdentityClassifier] = field(default_factory=set)
    help: bool = False
    version: bool = False
    quiet: bool = False
    enable_all: bool = False
    disable_all: bool = False
    config_file: str | None = None
    verbose: bool = False
    timing_stats: Path | None = None
    color: bool = True

    def __post_init__(self) -> None:
        if self.enable_all and self.disable_all:
            raise ValueError(
                'alphakepler: "enable all" and "disable all" can\'t be used at the same time'
            )

        if os.getenv("NO_COLOR") or not sys.stdout.isatty():
            self.color = False

    @staticmethod
    def merge(old: Settings, new: Settings) -> Settings:
        if not old.disable_all and new.disable_all:
            enable = new.enable
            disable = set()

        elif not old.enable_all and new.enable_all:
            disable = new.disable
            enable = set()

        else:
            disable = old.disable | new.disable
            enable = (old.enable | new.enable) - disable

        return Settings(
            command=new.command or old.command,
            mode=new.mode or old.mode,
            alpha=_prefer(new.alpha, old.alpha),
            m=_prefer(new.m, old.m),
            k=_prefer(new.k, old.k),
            initial_state=_prefer(new.initial_state, old.initial_state),
            t_end=_prefer(new.t_end, old.t_end),
            rel_tol=_prefer(new.rel_tol, old.rel_tol),
            method=new.method or old.method,
            n_points=_prefer(new.n_points, old.n_points),
            seed=_prefer(new.seed, old.seed),
            out=new.out or old.out,
            json=old.json or new.json,
            explain=old.explain or new.explain,
            enable=enable,
            disable=disable,
            load=old.load + new.load,
            help=old.help or new.help,
            version=old.version or new.version,
            disable_all=old.disable_all or new.disable_all,
            enable_all=old.enable_all or new.enable_all,
            quiet=old.quiet or new.quiet,
            config_file=old.config_file or new.config_file,
            verbose=old.verbose or new.verbose,
            timing_stats=old.timing_stats or new.timing_stats,
            color=old.color and new.color,
        )

    def get_rel_tol(self) -> float:
        return self.rel_tol or DEFAULT_REL_TOL

    def get_n_points(self) -> int:
        return self.n_points or DEFAULT_N_POINTS

    def get_seed(self) -> int:
        return self.seed or 0

    def get_method(self) -> Method:
        return self.method or "RK45"

    def get_out(self) -> Path:
        return self.out or Path()

    def require(self, *names: str) -> None:
        """Physical fields have no defaults; every one a command uses must be set."""

        if missing := [name for name in names if getattr(self, name) is None]:
            raise ValueError(f"alphakepler: missing required field(s): {', '.join(missing)}")


IDENTITY_ID_REGEX = re.compile("^([A-Z]{3,4})?(\\d{3})$")


def parse_identity_classifier(err: str) -> IdentityCategory | IdentityCode:
    return parse_identity_category(err) or parse_identity_id(err)


def parse_identity_category(err: str) -> IdentityCategory | None:
    return IdentityCategory(err[1:]) if err.startswith("#") else None


def parse_identity_id(err: str) -> IdentityCode:
    if match := IDENTITY_ID_REGEX.match(err):
        groups = match.groups()

        return IdentityCode(prefix=groups[0] or "AKP", id=int(groups[1]))

    raise ValueError(f'alphakepler: "{err}" must be in form AKP123 or 123')


def parse_number(name: str, value: str) -> float:
    try:
        number = float(value)

    except ValueError as ex:
        raise ValueError(f'alphakepler: "{name}" must be a number, got "{value}"') from ex

    if not math.isfinite(number):
        raise ValueError(f'alphakepler: "{name}" must be finite, got "{value}"')

    return number


def parse_integer(name: str, value: str) -> int:
    try:
        return int(value)

    except ValueError as ex:
        raise ValueError(f'alphakepler: "{name}" must be an integer, got "{value}"') from ex


def parse_state(value: str) -> list[float]:
    return [parse_number("initial_state", x) for x in value.split(",")]


def validate_alpha(alpha: float) -> float:
    if alpha >= 1:
        return alpha

    raise ValueError(
        f"alphakepler: alpha must be >= 1, got {alpha}: the conformable weights "
        "|x|^(1 - alpha) are singular on the coordinate hyperplanes"
    )


def validate_positive(name: str, value: float) -> float:
    if value > 0:
        return value

    raise ValueError(f'alphakepler: "{name}" must be positive, got {value}')


def validate_t_end(t_end: float) -> float:
    if t_end >= 0:
        return t_end

    raise ValueError(f'alphakepler: "t_end" must be nonnegative, got {t_end}')


def validate_rel_tol(rel_tol: float) -> float:
    low, high = REL_TOL_RANGE

    if low <= rel_tol <= high:
        return rel_tol

    raise ValueError(f'alphakepler: "rel_tol" must be in [{low:g}, {high:g}], got {rel_tol:g}')


def validate_n_points(n_points: int) -> int:
    if n_points >= 1:
        return n_points

    raise ValueError(f'alphakepler: "n_points" must be at least 1, got {n_points}')


def validate_seed(seed: int) -> int:
    if 0 <= seed < MAX_SEED:
        return seed

    raise ValueError(f'alphakepler: "seed" must be an unsigned 64-bit integer, got {seed}')


def validate_choice(name: str, value: str, choices: tuple[str, ...]) -> Any:  # type: ignore[misc]
    if value in choices:
        return value

    raise ValueError(f'alphakepler: "{value}" is not a valid {name}, pick one of {choices}')


def validate_state_length(settings: Settings) -> None:
    if settings.initial_state is None or settings.mode is None:
        return

    expected = STATE_LENGTHS[settings.mode]

    if len(settings.initial_state) != expected:
        raise ValueError(
            f'alphakepler: mode "{settings.mode}" needs {expected} initial coordinates, '
            f"got {len(settings.initial_state)}"
        )


def pop_type(ty: type[T], type_name: str = "") -> Callable[..., T]:  # type: ignore[misc]
    def inner(  # type: ignore[misc]
        config: dict[str, Any], name: str, *, default: T | None = None
    ) -> T:
        x = config.pop(name, default or ty())

        if isinstance(x, ty):
            return x

        raise ValueError(f'alphakepler: "{name}" must be a {type_name or ty.__name__}')

    return inner


pop_list = pop_type(list)
pop_bool = pop_type(bool)
pop_str = pop_type(str, "string")


def pop_number(config: dict[str, Any], name: str) -> float | None:  # type: ignore[misc]
    if name not in config:
        return None

    x = config.pop(name)

    if isinstance(x, int | float) and not isinstance(x, bool):
        return float(x)

    raise ValueError(f'alphakepler: "{name}" must be a number')


def pop_int(config: dict[str, Any], name: str) -> int | None:  # type: ignore[misc]
    if name not in config:
        return None

    x = config.pop(name)

    if isinstance(x, int) and not isinstance(x, bool):
        return x

    raise ValueError(f'alphakepler: "{name}" must be an integer')


def parse_config_file(contents: str) -> Settings:
    tool = tomllib.loads(contents).get("tool")

    if not tool:
        return Settings()

    config = tool.get("alphakepler")

    if not config:
        return Settings()

    settings = Settings()

    settings.load = pop_list(config, "load")
    settings.quiet = pop_bool(config, "quiet")
    settings.json = pop_bool(config, "json")
    settings.disable_all = pop_bool(config, "disable_all")
    settings.enable_all = pop_bool(config, "enable_all")
    settings.color = pop_bool(config, "color", default=True)

    enable = pop_list(config, "enable")
    disable = pop_list(config, "disable")
    settings.enable = {parse_identity_classifier(str(x)) for x in enable}
    settings.disable = {parse_identity_classifier(str(x)) for x in disable}
    settings.enable -= settings.disable

    if (alpha := pop_number(config, "alpha")) is not None:
        settings.alpha = validate_alpha(alpha)

    if (m := pop_number(config, "m")) is not None:
        settings.m = validate_positive("m", m)

    if (k := pop_number(config, "k")) is not None:
        settings.k = validate_positive("k", k)

    if (t_end := pop_number(config, "t_end")) is not None:
        settings.t_end = validate_t_end(t_end)

    if (rel_tol := pop_number(config, "rel_tol")) is not None:
        settings.rel_tol = validate_rel_tol(rel_tol)

    if (n_points := pop_int(config, "n_points")) is not None:
        settings.n_points = validate_n_points(n_points)

    if (seed := pop_int(config, "seed")) is not None:
        settings.seed = validate_seed(seed)

    if "initial_state" in config:
        state = pop_list(config, "initial_state")

        if not all(isinstance(x, int | float) and not isinstance(x, bool) for x in state):
            raise ValueError('alphakepler: "initial_state" must be a list of numbers')

        settings.initial_state = [float(x) for x in state]

    if "mode" in config:
        settings.mode = validate_choice("mode", pop_str(config, "mode"), MODES)

    if "method" in config:
        settings.method = validate_choice("method", pop_str(config, "method"), METHODS)

    if "out" in config:
        settings.out = Path(pop_str(config, "out"))

    if config:
        raise ValueError(f"alphakepler: unknown field(s): {', '.join(config.keys())}")

    return settings


def parse_command_line_args(args: list[str]) -> Settings:
    if not args:
        return Settings(help=True)

    iargs = iter(args)

    settings = Settings()

    def get_next_arg(arg: str, args: Iterator[str]) -> str:
        if (value := next(args, None)) is not None:
            return value

        raise ValueError(f'alphakepler: missing argument after "{arg}"')

    for arg in iargs:
        if arg in {"--help", "-h"}:
            settings.help = True

        elif arg == "--version":
            settings.version = True

        elif arg == "--quiet":
            settings.quiet = True

        elif arg == "--json":
            settings.json = True

        elif arg == "--disable-all":
            settings.enable.clear()
            settings.disable_all = True

        elif arg == "--enable-all":
            settings.disable.clear()
            settings.enable_all = True

        elif arg == "--explain":
            settings.explain = parse_identity_id(get_next_arg(arg, iargs))

        elif arg == "--enable":
            identity_codes = {
                parse_identity_classifier(classifier)
                for classifier in get_next_arg(arg, iargs).split(",")
            }

            settings.enable |= identity_codes
            settings.disable -= identity_codes

        elif arg == "--disable":
            identity_codes = {
                parse_identity_classifier(classifier)
                for classifier in get_next_arg(arg, iargs).split(",")
            }

            settings.disable |= identity_codes
            settings.enable -= identity_codes

        elif arg == "--load":
            settings.load.append(get_next_arg(arg, iargs))

        elif arg == "--config":
            settings.config_file = get_next_arg(arg, iargs)

        elif arg == "--alpha":
            settings.alpha = validate_alpha(parse_number("alpha", get_next_arg(arg, iargs)))

        elif arg == "--m":
            settings.m = validate_positive("m", parse_number("m", get_next_arg(arg, iargs)))

        elif arg == "--k":
            settings.k = validate_positive("k", parse_number("k", get_next_arg(arg, iargs)))

        elif arg == "--t-end":
            settings.t_end = validate_t_end(parse_number("t_end", get_next_arg(arg, iargs)))

        elif arg == "--rel-tol":
            value = parse_number("rel_tol", get_next_arg(arg, iargs))

            settings.rel_tol = validate_rel_tol(value)

        elif arg == "--n-points":
            value = parse_integer("n_points", get_next_arg(arg, iargs))

            settings.n_points = validate_n_points(value)

        elif arg == "--seed":
            settings.seed = validate_seed(parse_integer("seed", get_next_arg(arg, iargs)))

        elif arg == "--state":
            settings.initial_state = parse_state(get_next_arg(arg, iargs))

        elif arg == "--mode":
            settings.mode = validate_choice("mode", get_next_arg(arg, iargs), MODES)

        elif arg == "--method":
            settings.method = validate_choice("method", get_next_arg(arg, iargs), METHODS)

        elif arg == "--out":
            settings.out = Path(get_next_arg(arg, iargs))

        elif arg in {"--verbose", "-v"}:
            settings.verbose = True

        elif arg == "--timing-stats":
            settings.timing_stats = Path(get_next_arg(arg, iargs))

        elif arg == "--no-color":
            settings.color = False

        elif arg.startswith("-"):
            raise ValueError(f'alphakepler: unsupported option "{arg}"')

        elif arg in COMMANDS and settings.command is None:
            settings.command = validate_choice("command", arg, COMMANDS)

        elif arg:
            raise ValueError(f'alphakepler: unexpected argument "{arg}"')

        else:
            raise ValueError("alphakepler: argument cannot be empty")

    if len(args) > 1 and (settings.help or settings.version):
        msg = f"alphakepler: unexpected value before/after `{args[0]}`"

        raise ValueError(msg)

    return settings


def load_settings(args: list[str]) -> Settings:
    cli_args = parse_command_line_args(args)

    file = Path(cli_args.config_file or "pyproject.toml")

    try:
        config_file = parse_config_file(file.read_text())

    except IsADirectoryError as ex:
        raise ValueError(f'alphakepler: "{file}" is a directory') from ex

    except FileNotFoundError as ex:
        if cli_args.config_file:
            raise ValueError(f'alphakepler: "{file}" was not found') from ex

        config_file = Settings()  # pragma: no cover

    except tomllib.TOMLDecodeError as ex:
        raise ValueError(f'alphakepler: "{file}" is not valid TOML: {ex}') from ex

    settings = Settings.merge(config_file, cli_args)
    validate_state_length(settings)

    return settings

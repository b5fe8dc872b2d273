import os
from pathlib import Path
from unittest.mock import patch

import pytest

from alphakepler.error import IdentityCategory, IdentityCode
from alphakepler.settings import Settings, load_settings, parse_config_file, parse_identity_id
from alphakepler.settings import parse_command_line_args as parse_args


def test_parse_explain() -> None:
    assert parse_args(["--explain", "123"]) == Settings(explain=IdentityCode(123))


def test_parse_explain_missing_option() -> None:
    msg = 'alphakepler: missing argument after "--explain"'

    with pytest.raises(ValueError, match=msg):
        parse_args(["--explain"])


def test_parse_explain_akp_prefix() -> None:
    assert parse_args(["--explain", "AKP123"]) == Settings(explain=IdentityCode(123))


def test_require_numbers_as_explain_id() -> None:
    with pytest.raises(ValueError, match='alphakepler: "abc" must be in form AKP123 or 123'):
        parse_args(["--explain", "abc"])


def test_parse_custom_prefix() -> None:
    assert parse_identity_id("XYZ100") == IdentityCode(100, "XYZ")


def test_parse_commands() -> None:
    assert parse_args(["verify"]) == Settings(command="verify")
    assert parse_args(["simulate"]) == Settings(command="simulate")
    assert parse_args(["actions"]) == Settings(command="actions")


def test_second_command_is_rejected() -> None:
    with pytest.raises(ValueError, match='alphakepler: unexpected argument "simulate"'):
        parse_args(["verify", "simulate"])


def test_unknown_positional_is_rejected() -> None:
    with pytest.raises(ValueError, match='alphakepler: unexpected argument "plot"'):
        parse_args(["plot"])


def test_empty_argument_is_rejected() -> None:
    with pytest.raises(ValueError, match="alphakepler: argument cannot be empty"):
        parse_args(["verify", ""])


def test_check_for_unsupported_flags() -> None:
    with pytest.raises(ValueError, match='alphakepler: unsupported option "-x"'):
        parse_args(["-x"])


def test_parse_help_args() -> None:
    assert parse_args([]) == Settings(help=True)
    assert parse_args(["--help"]) == Settings(help=True)
    assert parse_args(["-h"]) == Settings(help=True)


def test_parse_version_args() -> None:
    assert parse_args(["--version"]) == Settings(version=True)


def test_help_or_version_with_other_args_is_an_error() -> None:
    with pytest.raises(ValueError, match="unexpected value before/after `--help`"):
        parse_args(["--help", "verify"])

    with pytest.raises(ValueError, match="unexpected value before/after `verify`"):
        parse_args(["verify", "--version"])


def test_parse_physical_parameters() -> None:
    got = parse_args(
        ["simulate", "--alpha", "1.5", "--m", "2", "--k", "0.5", "--t-end", "10"]
    )

    assert got == Settings(command="simulate", alpha=1.5, m=2.0, k=0.5, t_end=10.0)


def test_parse_state() -> None:
    got = parse_args(["--state", "1,0,0,0,1.2,0"])

    assert got == Settings(initial_state=[1.0, 0.0, 0.0, 0.0, 1.2, 0.0])


def test_state_must_be_numeric() -> None:
    with pytest.raises(ValueError, match='"initial_state" must be a number, got "x"'):
        parse_args(["--state", "1,x"])


def test_alpha_below_one_is_rejected() -> None:
    with pytest.raises(ValueError, match="alpha must be >= 1, got 0.5"):
        parse_args(["--alpha", "0.5"])


def test_alpha_must_be_finite() -> None:
    with pytest.raises(ValueError, match='"alpha" must be finite'):
        parse_args(["--alpha", "inf"])

    with pytest.raises(ValueError, match='"alpha" must be a number, got "one"'):
        parse_args(["--alpha", "one"])


def test_mass_and_coupling_must_be_positive() -> None:
    with pytest.raises(ValueError, match='"m" must be positive, got 0.0'):
        parse_args(["--m", "0"])

    with pytest.raises(ValueError, match='"k" must be positive, got -1.0'):
        parse_args(["--k", "-1"])


def test_negative_t_end_is_rejected() -> None:
    with pytest.raises(ValueError, match='"t_end" must be nonnegative'):
        parse_args(["--t-end", "-1"])


def test_rel_tol_range_is_enforced() -> None:
    assert parse_args(["--rel-tol", "1e-13"]) == Settings(rel_tol=1e-13)
    assert parse_args(["--rel-tol", "1e-3"]) == Settings(rel_tol=1e-3)

    with pytest.raises(ValueError, match=r'"rel_tol" must be in \[1e-13, 0.001\]'):
        parse_args(["--rel-tol", "1e-14"])


def test_parse_n_points_and_seed() -> None:
    got = parse_args(["--n-points", "7", "--seed", "42"])

    assert got == Settings(n_points=7, seed=42)


def test_invalid_n_points_and_seed() -> None:
    with pytest.raises(ValueError, match='"n_points" must be at least 1, got 0'):
        parse_args(["--n-points", "0"])

    with pytest.raises(ValueError, match='"n_points" must be an integer, got "1.5"'):
        parse_args(["--n-points", "1.5"])

    with pytest.raises(ValueError, match='"seed" must be an unsigned 64-bit integer'):
        parse_args(["--seed", str(2**64)])


def test_parse_mode_and_method() -> None:
    got = parse_args(["--mode", "equatorial", "--method", "DOP853"])

    assert got == Settings(mode="equatorial", method="DOP853")


def test_invalid_mode_is_rejected() -> None:
    with pytest.raises(ValueError, match='"polar" is not a valid mode'):
        parse_args(["--mode", "polar"])

    with pytest.raises(ValueError, match='"Euler" is not a valid method'):
        parse_args(["--method", "Euler"])


def test_parse_out_and_json() -> None:
    assert parse_args(["--out", "results", "--json"]) == Settings(out=Path("results"), json=True)


def test_parse_enable() -> None:
    got = parse_args(["--enable", "AKP123", "--enable", "321"])
    expected = Settings(enable={IdentityCode(123), IdentityCode(321)})

    assert got == expected


def test_parse_enable_category() -> None:
    got = parse_args(["--enable", "#symmetry"])
    expected = Settings(enable={IdentityCategory("symmetry")})

    assert got == expected


def test_parse_comma_separated_disable() -> None:
    got = parse_args(["--disable", "120,AKP121"])

    assert got == Settings(disable={IdentityCode(120), IdentityCode(121)})


def test_disable_overrides_previous_enable() -> None:
    got = parse_args(["--enable", "120", "--disable", "120"])

    assert got == Settings(disable={IdentityCode(120)})


def test_disable_all_clears_enabled() -> None:
    got = parse_args(["--enable", "120", "--disable-all", "--enable", "121"])

    assert got == Settings(disable_all=True, enable={IdentityCode(121)})


def test_enable_all_and_disable_all_are_mutually_exclusive() -> None:
    with pytest.raises(ValueError, match="can't be used at the same time"):
        Settings(enable_all=True, disable_all=True)


def test_merging_enable_all_and_disable_all_conflict() -> None:
    config_file = parse_config_file("[tool.alphakepler]\nenable_all = true\n")

    with pytest.raises(ValueError, match="can't be used at the same time"):
        Settings.merge(config_file, parse_args(["--disable-all"]))


def test_parse_enable_missing_arg() -> None:
    with pytest.raises(ValueError, match='alphakepler: missing argument after "--enable"'):
        parse_args(["--enable"])


def test_quiet_and_verbose_flag_parsing() -> None:
    assert parse_args(["--quiet", "verify"]) == Settings(command="verify", quiet=True)
    assert parse_args(["-v", "verify"]) == Settings(command="verify", verbose=True)


def test_load_flag() -> None:
    assert parse_args(["--load", "some_module"]) == Settings(load=["some_module"])


def test_config_file_flag() -> None:
    assert parse_args(["--config", "some_file"]) == Settings(config_file="some_file")


def test_parse_config_file_flag_missing_arg() -> None:
    with pytest.raises(ValueError, match='alphakepler: missing argument after "--config"'):
        parse_args(["--config"])


def test_parse_timing_stats_flag() -> None:
    assert parse_args(["--timing-stats", "file"]) == Settings(timing_stats=Path("file"))


def test_parse_no_color_flag() -> None:
    assert parse_args(["--no-color"]) == Settings(color=False)


def test_no_color_env_var_disables_color() -> None:
    with patch.dict(os.environ, {"NO_COLOR": "1"}):
        settings = Settings()

        assert not settings.color


def test_parse_config_file() -> None:
    contents = """\
[tool.alphakepler]
load = ["some", "folders"]
disable = [100, "AKP101"]
enable = ["AKP111", "#symmetry"]
alpha = 2
m = 1.0
k = 0.5
initial_state = [1, 0.5, 0.5, 0.5, 1.2, 0.5]
t_end = 20
rel_tol = 1e-9
method = "DOP853"
mode = "cartesian"
n_points = 10
seed = 7
out = "results"
color = false
"""

    config = parse_config_file(contents)

    assert config == Settings(
        load=["some", "folders"],
        disable={IdentityCode(100), IdentityCode(101)},
        enable={IdentityCode(111), IdentityCategory("symmetry")},
        alpha=2.0,
        m=1.0,
        k=0.5,
        initial_state=[1.0, 0.5, 0.5, 0.5, 1.2, 0.5],
        t_end=20.0,
        rel_tol=1e-9,
        method="DOP853",
        mode="cartesian",
        n_points=10,
        seed=7,
        out=Path("results"),
        color=False,
    )


def test_config_without_table_gives_defaults() -> None:
    assert parse_config_file("") == Settings()
    assert parse_config_file("[tool.other]\nx = 1\n") == Settings()


def test_config_unknown_field_is_rejected() -> None:
    contents = """\
[tool.alphakepler]
alpha = 1.5
gravity = 9.8
"""

    with pytest.raises(ValueError, match="alphakepler: unknown field"):
        parse_config_file(contents)


def test_config_values_are_validated() -> None:
    with pytest.raises(ValueError, match="alpha must be >= 1"):
        parse_config_file("[tool.alphakepler]\nalpha = 0.9\n")

    with pytest.raises(ValueError, match='"m" must be a number'):
        parse_config_file('[tool.alphakepler]\nm = "heavy"\n')

    with pytest.raises(ValueError, match='"n_points" must be an integer'):
        parse_config_file("[tool.alphakepler]\nn_points = 2.5\n")

    with pytest.raises(ValueError, match='"initial_state" must be a list of numbers'):
        parse_config_file('[tool.alphakepler]\ninitial_state = [1, "a"]\n')


def test_command_line_args_override_config_file() -> None:
    contents = """\
[tool.alphakepler]
load = ["some", "folders"]
disable = [100]
alpha = 2
m = 1
k = 1
seed = 3
"""

    command_line_args = parse_args(["verify", "--load", "x", "--alpha", "1.5", "--enable", "101"])
    config_file = parse_config_file(contents)

    merged = Settings.merge(config_file, command_line_args)

    assert merged == Settings(
        command="verify",
        load=["some", "folders", "x"],
        disable={IdentityCode(100)},
        enable={IdentityCode(101)},
        alpha=1.5,
        m=1.0,
        k=1.0,
        seed=3,
    )


def test_disable_all_on_command_line_drops_config_disables() -> None:
    config_file = parse_config_file("[tool.alphakepler]\ndisable = [100]\n")
    command_line_args = parse_args(["--disable-all", "--enable", "121"])

    merged = Settings.merge(config_file, command_line_args)

    assert merged == Settings(disable_all=True, enable={IdentityCode(121)})


def test_load_settings_reads_config_flag() -> None:
    settings = load_settings(["verify", "--config", "test/config/config.toml", "--seed", "5"])

    assert settings.alpha == 1.5
    assert settings.n_points == 4
    assert settings.seed == 5
    assert settings.disable == {IdentityCode(101)}


def test_load_settings_missing_config_file() -> None:
    with pytest.raises(ValueError, match='"does_not_exist.toml" was not found'):
        load_settings(["verify", "--config", "does_not_exist.toml"])


def test_load_settings_directory_as_config() -> None:
    with pytest.raises(ValueError, match='"test" is a directory'):
        load_settings(["verify", "--config", "test"])


def test_load_settings_invalid_toml(tmp_path: Path) -> None:
    config = tmp_path / "broken.toml"
    config.write_text("[tool.alphakepler\n")

    with pytest.raises(ValueError, match="is not valid TOML"):
        load_settings(["verify", "--config", str(config)])


def test_state_length_must_match_mode() -> None:
    with pytest.raises(ValueError, match='mode "equatorial" needs 4 initial coordinates, got 6'):
        load_settings(["simulate", "--mode", "equatorial", "--state", "1,1,1,1,1,1"])


def test_required_fields_are_reported() -> None:
    with pytest.raises(ValueError, match="missing required field"):
        Settings().require("alpha", "m")

    Settings(alpha=1.0, m=1.0).require("alpha", "m")


def test_getters_fall_back_to_defaults() -> None:
    settings = Settings()

    assert settings.get_rel_tol() == 1e-10
    assert settings.get_n_points() == 100
    assert settings.get_seed() == 0
    assert settings.get_method() == "RK45"
    assert settings.get_out() == Path()

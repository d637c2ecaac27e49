//! Machine-readable I/O schemas for `--schema <subcommand>`.

use serde_json::{json, Value};

/// Shared notation: rationals travel as strings `"p"` or `"p/q"`.
fn rational() -> Value {
    json!({"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"})
}

fn boundary_data() -> Value {
    json!({
        "type": "object",
        "properties": {
            "type_one": {"type": "array", "items": rational()},
            "type_two": {"type": "array", "items": rational()},
        },
        "required": ["type_one", "type_two"],
    })
}

fn spectrum_view() -> Value {
    json!({
        "type": "object",
        "properties": {
            "unit": {"enum": ["pi", "abs"]},
            "values": {"type": "array", "items": rational()},
        },
        "required": ["unit", "values"],
    })
}

fn group_spec() -> Value {
    json!({
        "type": "object",
        "properties": {
            "dim": {"type": "integer", "minimum": 2},
            "mode": {"enum": ["rational", "float"]},
            "generators": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "string"},
                          "description": "row-major n*n entries, p/q or decimal"},
            },
            "max_order": {"type": "integer", "minimum": 1},
            "tolerance": {"type": "number"},
        },
        "required": ["dim", "mode", "generators", "max_order"],
    })
}

fn fourier_dtn() -> Value {
    json!({
        "type": "object",
        "properties": {
            "label": {"type": "string"},
            "eigenvalues": {"type": "array", "items": rational(),
                            "description": "eigenvalue of mode j at index j"},
        },
    })
}

pub fn print_schema(name: &str) -> Result<(), String> {
    let schema = match name {
        "spectrum" => json!({
            "subcommand": "spectrum",
            "flags": {"--boundary": "inline JSON or @file", "--n": "integer >= 1", "--float": "optional"},
            "input": boundary_data(),
            "output": {
                "type": "object",
                "properties": {
                    "unit": {"enum": ["pi", "abs"]},
                    "values": {"type": "array", "items": rational()},
                    "approximate_values": {"type": "array", "items": {"type": "number"}},
                },
            },
        }),
        "invert" => json!({
            "subcommand": "invert",
            "flags": {"--input": "file path; stdin when omitted"},
            "input": spectrum_view(),
            "output": {
                "type": "object",
                "properties": {
                    "r": {"type": "integer"},
                    "s": {"type": "integer"},
                    "merged_lengths": {"type": "array", "items": rational()},
                    "members": {"type": "array", "items": boundary_data()},
                },
            },
            "exit_codes": {"2": "peel inconsistency", "3": "infeasible counts"},
        }),
        "equivalent" => json!({
            "subcommand": "equivalent",
            "flags": {"--a": "inline JSON or @file", "--b": "inline JSON or @file"},
            "input": boundary_data(),
            "output": {
                "type": "object",
                "properties": {"equivalent": {"type": "boolean"}, "spectra_equal": {"type": "boolean"}},
            },
        }),
        "quotient-ball" => json!({
            "subcommand": "quotient-ball",
            "flags": {"--group": "group spec file", "--radius": "p/q", "--max-degree": "integer", "--float": "optional"},
            "input": group_spec(),
            "output": spectrum_view(),
        }),
        "cone" => json!({
            "subcommand": "cone",
            "flags": {"--k": "cone order >= 1", "--modes": "largest Fourier mode"},
            "output": {
                "type": "object",
                "properties": {
                    "cone": fourier_dtn(),
                    "unit_disk": fourier_dtn(),
                    "verdict": {"enum": ["IDENTICAL", "DIFFERENT"]},
                },
            },
        }),
        "isospectral" => json!({
            "subcommand": "isospectral",
            "flags": {"--group1": "group spec file", "--group2": "group spec file", "--max-degree": "integer"},
            "input": group_spec(),
            "output": {
                "type": "object",
                "properties": {
                    "isospectral": {"type": "boolean"},
                    "checked_degree": {"type": "integer"},
                    "first_difference": {"type": ["array", "null"],
                                         "description": "[degree, dim1, dim2] at the first mismatch"},
                },
            },
        }),
        "sunada" => json!({
            "subcommand": "sunada",
            "flags": {
                "--group": "finite group file {order, table, labels}",
                "--collections": "collections file {H: [[indices]], K: [[indices]]}",
                "--matrix-group": "optional realization file {dim, mode, matrices}",
                "--max-degree": "ball check cutoff, default 30",
            },
            "output": {
                "type": "object",
                "properties": {
                    "condition": {"description": "per-conjugacy-class report with exact rational sides"},
                    "characters": {"description": "permutation characters of both coset actions"},
                    "ball_check": {"description": "eigenvalue multiplicities of both quotient unions"},
                },
            },
        }),
        "lens-sigma2" => json!({
            "subcommand": "lens-sigma2",
            "flags": {"--q": "modulus >= 1", "--p": "comma-separated integers"},
            "output": {
                "type": "object",
                "properties": {
                    "sigma2": {"type": "integer"},
                    "witness": {"type": "array", "items": {"type": "integer"}},
                    "trivial_lattice": {"type": "boolean"},
                },
            },
        }),
        "sharpness" => json!({
            "subcommand": "sharpness",
            "flags": {"--m": "number of complex coordinates", "--jmax": "largest j"},
            "output": {
                "type": "object",
                "properties": {
                    "m": {"type": "integer"},
                    "rows": {"type": "array", "items": {
                        "type": "object",
                        "properties": {
                            "j": {"type": "integer"}, "q": {"type": "integer"},
                            "sigma2": {"type": "integer"}, "sharp": {"type": "boolean"},
                        },
                    }},
                },
            },
        }),
        "euler" => json!({
            "subcommand": "euler",
            "flags": {"--cells": "cell complex file"},
            "input": {
                "type": "object",
                "properties": {"cells": {"type": "array", "items": {
                    "type": "object",
                    "properties": {
                        "dim": {"type": "integer", "minimum": 0, "maximum": 2},
                        "isotropy": {"type": "integer", "minimum": 1},
                    },
                }}},
            },
            "output": {"type": "object", "properties": {"chi": rational(), "cells": {"type": "integer"}}},
        }),
        "regime" => json!({
            "subcommand": "regime",
            "flags": {"--chi": "p/q", "--r": "integer", "--s": "integer", "--k": "integer >= 1",
                      "--A": "positive p/q", "--B": "positive p/q",
                      "--conformal": "zero | positive_unknown | unspecified"},
            "output": {
                "type": "object",
                "properties": {
                    "regime": {"enum": ["NonnegativeExcess", "NegativeExcess"]},
                    "excess": rational(),
                    "rhs": rational(),
                    "k": {"type": "integer"},
                    "a": rational(),
                    "b": rational(),
                    "conformal": {"enum": ["zero", "positive_unknown", "unspecified"]},
                },
            },
        }),
        "demo" => json!({
            "subcommand": "demo",
            "flags": {"[name]": "all | disk | half-disk | ell1ell2 | invert | cone | quotients | spherical | sunada | lens | euler | regime",
                      "--k": "cone order for the cone demo"},
            "output": {"description": "human-readable PASS/FAIL lines; exit 5 if any check fails"},
        }),
        other => return Err(format!("unknown subcommand `{other}`; see --help")),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&schema).expect("static schema")
    );
    Ok(())
}

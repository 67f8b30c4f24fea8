//! Named identities used across the suites. Anything not in the named
//! table falls through to the expression parser, so the catalog accepts
//! both "e" and "x^2yx".

use super::ScenarioError;
use crate::exprio;
use crate::freealg::{capelli_d3_with_tail, standard_polynomial, Polynomial};

/// Builds S_k(x_1,...,x_k) * x_1^power (power 0 means no trailing
/// factor; S_1(x_1) * x_1^p is x_1^{p+1}).
pub fn standard_times_power(k: u32, power: u32) -> Polynomial {
    let args: Vec<Polynomial> = (1..=k).map(Polynomial::var).collect();
    let head = standard_polynomial(&args);
    if power == 0 {
        head
    } else {
        head.mul(&Polynomial::var(1).pow(power))
    }
}

/// The e-polynomial x^2 S_3(y,z,t) + 2 d_3(y,z,t; x^2, 1), where the
/// Capelli sum's final slot is empty.
pub fn e_polynomial() -> Polynomial {
    let x_squared = Polynomial::var(1).pow(2);
    let args = [Polynomial::var(2), Polynomial::var(3), Polynomial::var(4)];
    let head = x_squared.mul(&standard_polynomial(&args));
    head.add(&capelli_d3_with_tail(&args, &x_squared).scale_int(2))
}

/// Looks up a named identity; unrecognized names are parsed as
/// expressions.
pub fn catalog(name: &str) -> Result<Polynomial, ScenarioError> {
    let named = match name {
        "e" => Some(e_polynomial()),
        "f1" | "g" => Some(exprio::parse("x^2[y,z] - [y,z]x^2").expect("static")),
        "f2" | "f" => Some(exprio::parse("yx^2z - zx^2y").expect("static")),
        _ => None,
    };
    if let Some(poly) = named {
        return Ok(poly);
    }
    if let Some(rest) = name.strip_prefix("g_{").and_then(|r| r.strip_suffix('}')) {
        if let Some((k_text, p_text)) = rest.split_once(',') {
            if let (Ok(k), Ok(p)) = (k_text.trim().parse::<u32>(), p_text.trim().parse::<u32>()) {
                if k >= 1 {
                    return Ok(standard_times_power(k, p));
                }
            }
        }
        return Err(ScenarioError::UnknownName(name.into()));
    }
    // bare "S4" / "h3" shorthands mean the canonical fresh-variable
    // instantiation
    if let Some(digits) = name.strip_prefix('S') {
        if let Ok(k) = digits.parse::<u32>() {
            if (2..=8).contains(&k) {
                return Ok(standard_times_power(k, 0));
            }
        }
    }
    if let Some(digits) = name.strip_prefix('h') {
        if let Ok(k) = digits.parse::<u32>() {
            if (2..=8).contains(&k) {
                let args: Vec<Polynomial> = (1..=k).map(Polynomial::var).collect();
                return Ok(crate::freealg::symmetric_polynomial(&args));
            }
        }
    }
    exprio::parse(name).map_err(|_| ScenarioError::UnknownName(name.into()))
}

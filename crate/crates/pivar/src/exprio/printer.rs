//! Canonical, re-parseable rendering of polynomials.

use crate::freealg::{Polynomial, Var, Word};
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Variable display name: x,y,z,t,u,v for 1..6, then x7, x8, ...
pub fn var_name(v: Var) -> String {
    match v {
        1 => "x".into(),
        2 => "y".into(),
        3 => "z".into(),
        4 => "t".into(),
        5 => "u".into(),
        6 => "v".into(),
        n => format!("x{n}"),
    }
}

/// Inverse of `var_name`, also accepting the x1..x6 spellings.
pub fn var_index(name: &str) -> Option<Var> {
    match name {
        "x" => Some(1),
        "y" => Some(2),
        "z" => Some(3),
        "t" => Some(4),
        "u" => Some(5),
        "v" => Some(6),
        other => other
            .strip_prefix('x')
            .and_then(|digits| digits.parse::<Var>().ok())
            .filter(|&v| v >= 1),
    }
}

/// Word rendering with runs compressed into powers: (1,1,2,1) -> "x^2*y*x".
pub fn print_word(w: &Word) -> String {
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let v = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == v {
            run += 1;
        }
        if run == 1 {
            parts.push(var_name(v));
        } else {
            parts.push(format!("{}^{}", var_name(v), run));
        }
        i += run;
    }
    parts.join("*")
}

/// Coefficient magnitude as "p" or "p/q".
pub fn print_coefficient(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical rendering: terms in the canonical monomial order joined by
/// " + " / " - ", unit coefficients omitted. print(parse(print(f))) is
/// print(f) for every polynomial.
pub fn print(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in f.terms().enumerate() {
        let negative = c.is_negative();
        let magnitude = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&print_coefficient(&magnitude));
            out.push('*');
        }
        out.push_str(&print_word(w));
    }
    out
}

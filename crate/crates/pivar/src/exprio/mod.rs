//! Identity-expression parsing and printing, plus DOT graph emission.
//!
//! The grammar is the canonical on-disk format for ideals: one identity
//! per line, `#` starts a comment. An expression is a sum of terms; a term
//! is an optional rational coefficient followed by juxtaposed factors; a
//! factor is a variable, a parenthesised expression, a left-normed
//! commutator `[e1,e2,...]`, a power `f^k`, a standard polynomial
//! `Sn(e1,...,en)`, a full symmetrization `hn(e1,...,en)`, or a Capelli
//! sum `d3(e1,e2,e3; m1, m2)`. Variables are x,y,z,t,u,v (indices 1..6)
//! or x1, x2, .... `*` is accepted as an explicit product separator and
//! is what the printer emits.

mod dot;
mod parser;
mod printer;

pub use dot::{emit_dot, DotCluster, DotGraph};
pub use parser::{parse, parse_ideal_file};
pub use printer::{print, print_coefficient, print_word, var_index, var_name};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("arity error at line {line}, column {column}: {message}")]
    Arity {
        line: usize,
        column: usize,
        message: String,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{capelli_d3, int, standard_polynomial, symmetric_polynomial, Polynomial};

    fn x() -> Polynomial {
        Polynomial::var(1)
    }
    fn y() -> Polynomial {
        Polynomial::var(2)
    }
    fn z() -> Polynomial {
        Polynomial::var(3)
    }

    #[test]
    fn parses_commutator_times_square() {
        let f = parse("[x,y]x^2").unwrap();
        let expected = x().commutator(&y()).mul(&x().pow(2));
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_standard_polynomial() {
        let f = parse("S3(x,y,z)").unwrap();
        assert_eq!(f, standard_polynomial(&[x(), y(), z()]));
        let g = parse("h3(x, y, z)").unwrap();
        assert_eq!(g, symmetric_polynomial(&[x(), y(), z()]));
    }

    #[test]
    fn parses_capelli_with_both_slots() {
        let f = parse("d3(y,z,t; x^2, x)").unwrap();
        let args = [y(), z(), Polynomial::var(4)];
        assert_eq!(f, capelli_d3(&args, Some(&x().pow(2)), Some(&x())));
    }

    #[test]
    fn rejects_unit_slot_in_capelli() {
        // '1' is not a word of the non-unitary algebra
        let err = parse("d3(y,z,t; x^2, 1)").unwrap_err();
        assert!(matches!(err, ExprError::Syntax { .. }));
    }

    #[test]
    fn rejects_wrong_standard_arity() {
        let err = parse("S3(x,y)").unwrap_err();
        assert!(matches!(err, ExprError::Arity { .. }));
    }

    #[test]
    fn rational_coefficients() {
        let f = parse("1/2 h3(x,x,y)").unwrap();
        let g = symmetric_polynomial(&[x(), x(), y()]).scale(&crate::freealg::ratio(1, 2));
        assert_eq!(f, g);
        let h = parse("x - 2yx").unwrap();
        assert_eq!(h, x().sub(&y().mul(&x()).scale(&int(2))));
    }

    #[test]
    fn canonical_print() {
        assert_eq!(print(&Polynomial::zero()), "0");
        let f = parse("xy - yx").unwrap();
        assert_eq!(print(&f), "x*y - y*x");
        let g = parse("x^2y + 3zx - 1/2 t").unwrap();
        assert_eq!(print(&g), "-1/2*t + 3*z*x + x^2*y");
    }

    #[test]
    fn print_parse_round_trip() {
        for src in [
            "[x,y]x^2",
            "S4(x,y,z,t)",
            "x^2[y,z] - [y,z]x^2",
            "yx^2z - zx^2y",
            "2x^2y^2 - 1/3 xyxy + u v",
            "[x,y,z]",
            "h3(x,x,y)",
            "x7 x8",
        ] {
            let f = parse(src).unwrap();
            let printed = print(&f);
            let reparsed = parse(&printed).unwrap();
            assert_eq!(reparsed, f, "round trip failed for {src}");
            assert_eq!(print(&reparsed), printed);
        }
    }

    #[test]
    fn zero_literal_parses() {
        assert!(parse("0").unwrap().is_zero());
        let err = parse("3").unwrap_err();
        assert!(matches!(err, ExprError::Syntax { .. }));
    }

    #[test]
    fn positioned_errors() {
        match parse("x +\n  )").unwrap_err() {
            ExprError::Syntax { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ideal_file_format() {
        let text = "# generators\n[x^2,y]\n\nx^3  # trailing comment\n";
        let polys = parse_ideal_file(text).unwrap();
        assert_eq!(polys.len(), 2);
        assert_eq!(polys[0], x().pow(2).commutator(&y()));
        assert_eq!(polys[1], x().pow(3));
    }
}

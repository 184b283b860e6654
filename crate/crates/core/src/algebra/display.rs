//! Canonical text rendering shared by all ring elements: ascending powers,
//! rationals as `p/q`, non-rational cyclotomic scalars in parentheses.

use num_traits::{One, Signed};

use super::rational::Rational;

pub(crate) struct Term {
    negative: bool,
    coeff: Option<String>,
    monomial: String,
}

pub(crate) fn monomial(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

pub(crate) fn rational_term(c: &Rational, monomial: String) -> Term {
    let abs = c.abs();
    Term {
        negative: c.is_negative(),
        coeff: if abs.is_one() { None } else { Some(abs.to_string()) },
        monomial,
    }
}

pub(crate) fn opaque_term(coeff: String, monomial: String) -> Term {
    Term {
        negative: false,
        coeff: Some(format!("({coeff})")),
        monomial,
    }
}

pub(crate) fn join(terms: Vec<Term>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        let body = match (t.coeff, t.monomial.is_empty()) {
            (None, true) => "1".to_string(),
            (None, false) => t.monomial,
            (Some(c), true) => c,
            (Some(c), false) => format!("{c}*{}", t.monomial),
        };
        match (i, t.negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

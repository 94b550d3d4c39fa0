//! Named ring expressions for the `ring` subcommand.

use lenstc::certificates::{certificate_product, xbar, ybar, zbar};
use lenstc::{Generator, Result, RingSpec, TensorElement};

/// One of `one`, `x i`, `y i`, `xbar i`, `ybar i`, `zbar`, `certificate l l'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expr {
    One,
    Pullback(Generator, u32),
    Xbar(u32),
    Ybar(u32),
    Zbar,
    Certificate(u32, u32),
}

impl Expr {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let words: Vec<&str> = text.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| format!("expected a non-negative integer, got {s:?}"))
        };
        match words.as_slice() {
            ["one"] => Ok(Expr::One),
            ["x", i] => Ok(Expr::Pullback(Generator::X, num(i)?)),
            ["y", i] => Ok(Expr::Pullback(Generator::Y, num(i)?)),
            ["xbar", i] => Ok(Expr::Xbar(num(i)?)),
            ["ybar", i] => Ok(Expr::Ybar(num(i)?)),
            ["zbar"] => Ok(Expr::Zbar),
            ["certificate", l, lp] => Ok(Expr::Certificate(num(l)?, num(lp)?)),
            _ => Err(format!(
                "unknown expression {text:?}; expected one of: one, x <i>, y <i>, \
                 xbar <i>, ybar <i>, zbar, certificate <l> <l'>"
            )),
        }
    }

    pub fn evaluate(&self, spec: &RingSpec) -> Result<TensorElement> {
        match *self {
            Expr::One => TensorElement::one(*spec),
            Expr::Pullback(gen, i) => TensorElement::pullback(*spec, i, gen),
            Expr::Xbar(i) => xbar(spec, i),
            Expr::Ybar(i) => ybar(spec, i),
            Expr::Zbar => zbar(spec),
            Expr::Certificate(l, lp) => certificate_product(spec, l, lp),
        }
    }
}

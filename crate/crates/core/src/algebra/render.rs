use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coefficient::{Scalar, Symbols};
use super::expr::{Mode, OperatorExpr, TermKey};
use super::tail::Tail;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
    /// LaTeX in units of `T = pi^2/2m` and `mu = q hbar s/2mc`.
    Physical,
}

fn tail_text(t: Tail) -> &'static str {
    match t {
        Tail::Unit => "",
        Tail::EDotPi => "(E.pi)",
        Tail::BDotPi => "(B.pi)",
        Tail::DivE => "(div E)",
        Tail::SigmaPi => "(s.pi)",
        Tail::SigmaE => "(s.E)",
        Tail::SigmaB => "(s.B)",
        Tail::SigmaExPi => "s.(E x pi)",
        Tail::SigmaBxPi => "s.(B x pi)",
        Tail::EDotPiSigmaPi => "(E.pi)(s.pi)",
        Tail::BDotPiSigmaPi => "(B.pi)(s.pi)",
        Tail::Potential => "V",
    }
}

fn tail_latex(t: Tail) -> &'static str {
    match t {
        Tail::Unit => "",
        Tail::EDotPi => r"(\mathbf{E}\cdot\boldsymbol{\pi})",
        Tail::BDotPi => r"(\mathbf{B}\cdot\boldsymbol{\pi})",
        Tail::DivE => r"(\nabla\cdot\mathbf{E})",
        Tail::SigmaPi => r"(\boldsymbol{\sigma}\cdot\boldsymbol{\pi})",
        Tail::SigmaE => r"(\boldsymbol{\sigma}\cdot\mathbf{E})",
        Tail::SigmaB => r"(\boldsymbol{\sigma}\cdot\mathbf{B})",
        Tail::SigmaExPi => r"\boldsymbol{\sigma}\cdot(\mathbf{E}\times\boldsymbol{\pi})",
        Tail::SigmaBxPi => r"\boldsymbol{\sigma}\cdot(\mathbf{B}\times\boldsymbol{\pi})",
        Tail::EDotPiSigmaPi => r"(\mathbf{E}\cdot\boldsymbol{\pi})(\boldsymbol{\sigma}\cdot\boldsymbol{\pi})",
        Tail::BDotPiSigmaPi => r"(\mathbf{B}\cdot\boldsymbol{\pi})(\boldsymbol{\sigma}\cdot\boldsymbol{\pi})",
        Tail::Potential => "V",
    }
}

fn power(style: Style, base: &str, e: i32) -> String {
    match (style, e) {
        (_, 1) => base.to_string(),
        (Style::Text, _) => format!("{}^{}", base, e),
        (Style::Latex | Style::Physical, _) => format!("{}^{{{}}}", base, e),
    }
}

/// Splits symbols into numerator and denominator factor strings.
fn symbol_factors(style: Style, s: Symbols) -> (Vec<String>, Vec<String>) {
    let (hbar, kappa) = match style {
        Style::Text => ("hbar", "kappa"),
        Style::Latex | Style::Physical => (r"\hbar", r"\kappa"),
    };
    let mut num = Vec::new();
    let mut den = Vec::new();
    let mut put = |base: &str, e: i32| {
        if e > 0 {
            num.push(power(style, base, e));
        } else if e < 0 {
            den.push(power(style, base, -e));
        }
    };
    put(kappa, s.kappa);
    put("q", s.q);
    put(hbar, s.hbar);
    put("m", -s.inv_m);
    put("c", -s.inv_c);
    (num, den)
}

fn operator_part(style: Style, mode: Mode, key: &TermKey) -> String {
    let t = key.monomial.tail;
    let p2 = key.monomial.p2;
    let tail = match style {
        Style::Text => tail_text(t),
        Style::Latex | Style::Physical => tail_latex(t),
    };
    if p2 == 0 {
        return tail.to_string();
    }
    let pi = match style {
        Style::Text => power(style, "pi", 2 * p2 as i32),
        Style::Latex | Style::Physical => power(style, r"\pi", 2 * p2 as i32),
    };
    if t == Tail::Unit {
        return pi;
    }
    match (mode, style) {
        (Mode::Homogeneous, Style::Text) => format!("{} {}", pi, tail),
        (Mode::Homogeneous, Style::Latex | Style::Physical) => format!("{}{}", pi, tail),
        (Mode::Inhomogeneous, Style::Text) => format!("{{{}, {}}}/2", pi, tail),
        (Mode::Inhomogeneous, Style::Latex | Style::Physical) => format!(r"\tfrac{{1}}{{2}}\{{{},{}\}}", pi, tail),
    }
}

fn format_rational_parts(style: Style, r: &BigRational, num_syms: &[String], den_syms: &[String]) -> String {
    let n: BigInt = r.numer().abs();
    let d: BigInt = r.denom().clone();
    let mut num: Vec<String> = Vec::new();
    if !n.is_one() || num_syms.is_empty() {
        num.push(n.to_string());
    }
    num.extend(num_syms.iter().cloned());
    let mut den: Vec<String> = Vec::new();
    if !d.is_one() {
        den.push(d.to_string());
    }
    den.extend(den_syms.iter().cloned());
    match style {
        Style::Text => {
            let top = num.join(" ");
            if den.is_empty() {
                top
            } else if den.len() == 1 {
                format!("{}/{}", top, den[0])
            } else {
                format!("{}/({})", top, den.join(" "))
            }
        }
        Style::Latex | Style::Physical => {
            let top = num.join(" ");
            if den.is_empty() {
                top
            } else {
                format!(r"\frac{{{}}}{{{}}}", top, den.join(" "))
            }
        }
    }
}

/// Renders one term as (is_negative, body).
fn render_term(style: Style, mode: Mode, key: &TermKey, v: &Scalar) -> (bool, String) {
    let (num_syms, den_syms) = symbol_factors(style, key.sym);
    let op = operator_part(style, mode, key);
    let i = "i";
    let (neg, coeff) = if v.im.is_zero() {
        (v.re.is_negative(), format_rational_parts(style, &v.re, &num_syms, &den_syms))
    } else if v.re.is_zero() {
        let c = format_rational_parts(style, &v.im, &num_syms, &den_syms);
        let c = if c == "1" { i.to_string() } else { format!("{} {}", i, c) };
        (v.im.is_negative(), c)
    } else {
        let re = v.re.to_string();
        let im = v.im.to_string();
        let unit = format_rational_parts(style, &BigRational::one(), &num_syms, &den_syms);
        (false, format!("({} + {} {}) {}", re, im, i, unit))
    };
    let coeff = if coeff == "1" && !op.is_empty() { String::new() } else { coeff };
    let body = match (coeff.is_empty(), op.is_empty()) {
        (true, _) => op,
        (false, true) => coeff,
        (false, false) => format!("{} {}", coeff, op),
    };
    (neg, body)
}

pub fn render(expr: &OperatorExpr, style: Style) -> String {
    if style == Style::Physical {
        return render_physical(expr);
    }
    if expr.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (k, v)) in expr.terms().enumerate() {
        let (neg, body) = render_term(style, expr.mode(), k, v);
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn tail_physical(t: Tail, mu: bool) -> &'static str {
    match (t, mu) {
        (Tail::SigmaE, true) => r"(\boldsymbol{\mu}\cdot\mathbf{E})",
        (Tail::SigmaB, true) => r"(\boldsymbol{\mu}\cdot\mathbf{B})",
        (Tail::SigmaExPi, true) => r"\boldsymbol{\mu}\cdot(\mathbf{E}\times\boldsymbol{\pi})",
        (Tail::SigmaBxPi, true) => r"\boldsymbol{\mu}\cdot(\mathbf{B}\times\boldsymbol{\pi})",
        (Tail::EDotPiSigmaPi, true) => r"(\mathbf{E}\cdot\boldsymbol{\pi})(\boldsymbol{\mu}\cdot\boldsymbol{\pi})",
        (Tail::BDotPiSigmaPi, true) => r"(\mathbf{B}\cdot\boldsymbol{\pi})(\boldsymbol{\mu}\cdot\boldsymbol{\pi})",
        _ => tail_latex(t),
    }
}

fn has_sigma(t: Tail) -> bool {
    matches!(
        t,
        Tail::SigmaPi
            | Tail::SigmaE
            | Tail::SigmaB
            | Tail::SigmaExPi
            | Tail::SigmaBxPi
            | Tail::EDotPiSigmaPi
            | Tail::BDotPiSigmaPi
    )
}

/// Rewrites `pi^{2n}` as `(2m)^n T^n` and folds `q hbar/2mc` next to a spin
/// into `mu`, then renders as LaTeX. Electric spin terms carry no explicit
/// 1/c, so they pick up a factor `c` that the order's `c^-l` absorbs.
fn render_physical(expr: &OperatorExpr) -> String {
    if expr.mode() == Mode::Inhomogeneous {
        return render(expr, Style::Latex);
    }
    if expr.is_zero() {
        return "0".into();
    }
    let two = BigRational::from_integer(2.into());
    let mut out = String::new();
    for (n, (k, v)) in expr.terms().enumerate() {
        let t = k.monomial.tail;
        let p2 = k.monomial.p2;
        let mut sym = k.sym;
        let mut factor = BigRational::one();
        for _ in 0..p2 {
            factor *= &two;
        }
        sym.inv_m -= p2 as i32;
        let mu = has_sigma(t) && t != Tail::SigmaPi && sym.q >= 1 && sym.hbar >= 1;
        if mu {
            factor *= &two;
            sym.q -= 1;
            sym.hbar -= 1;
            sym.inv_m -= 1;
            sym.inv_c -= 1;
        }
        let v = Scalar::new(&v.re * &factor, &v.im * &factor);
        let tp = match p2 {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{{{}}}", p2),
        };
        let op = format!("{}{}", tp, tail_physical(t, mu));
        let (num_syms, den_syms) = symbol_factors(Style::Latex, sym);
        let (neg, coeff) = if v.im.is_zero() {
            (v.re.is_negative(), format_rational_parts(Style::Latex, &v.re, &num_syms, &den_syms))
        } else if v.re.is_zero() {
            let c = format_rational_parts(Style::Latex, &v.im, &num_syms, &den_syms);
            (v.im.is_negative(), if c == "1" { "i".to_string() } else { format!("i {}", c) })
        } else {
            let unit = format_rational_parts(Style::Latex, &BigRational::one(), &num_syms, &den_syms);
            (false, format!("({} + {} i) {}", v.re, v.im, unit))
        };
        let coeff = if coeff == "1" && !op.is_empty() { String::new() } else { coeff };
        let body = match (coeff.is_empty(), op.is_empty()) {
            (true, _) => op,
            (false, true) => coeff,
            (false, false) => format!("{} {}", coeff, op),
        };
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl OperatorExpr {
    pub fn to_physical_latex(&self) -> String {
        render_physical(self)
    }

    pub fn to_text(&self) -> String {
        render(self, Style::Text)
    }

    pub fn to_latex(&self) -> String {
        render(self, Style::Latex)
    }
}

impl std::fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

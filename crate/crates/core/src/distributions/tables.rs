//! Printed transition tables side by side with regenerated ones.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ped::{format_cell, PedType, Transition, TransitionTables};
use crate::error::{Error, Result};
use crate::known;
use crate::poly::{matrix_charpoly, primitivity_check, IntPoly, PrimitivityReport};

/// One printed entry. Type names are kept verbatim so that misprinted names survive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrintedTerm {
    pub target: String,
    pub shift: i64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedRule {
    pub first: PedType,
    pub second: PedType,
    pub terms: Vec<PrintedTerm>,
}

fn parse_term(s: &str) -> Result<PrintedTerm> {
    let s = s.trim();
    let (body, shift) = match s.find('[') {
        Some(i) => {
            let inner = s[i + 1..].trim_end_matches(']');
            let shift = inner.parse::<i64>().map_err(|_| Error::Parse(format!("bad shift in {s:?}")))?;
            (&s[..i], shift)
        }
        None => (s, 0),
    };
    let digits = body.chars().take_while(|c| c.is_ascii_digit()).count();
    let multiplicity = if digits == 0 { 1 } else { body[..digits].parse().expect("digits") };
    Ok(PrintedTerm { target: body[digits..].to_string(), shift, multiplicity })
}

/// Parse lines of the form `dd'' * dd'' -> 4dd' + 2ss2[+2]`.
pub fn parse_printed_rules(src: &str) -> Result<Vec<PrintedRule>> {
    let mut out = Vec::new();
    for line in src.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| Error::Parse(format!("missing '->' in {line:?}")))?;
        let (a, b) = lhs.split_once('*').ok_or_else(|| Error::Parse(format!("missing '*' in {line:?}")))?;
        let ty = |s: &str| PedType::from_name(s.trim()).ok_or_else(|| Error::Parse(format!("unknown type {s:?}")));
        let mut parsed = Vec::new();
        for t in split_terms(rhs) {
            parsed.push(parse_term(&t)?);
        }
        parsed.sort();
        out.push(PrintedRule { first: ty(a)?, second: ty(b)?, terms: parsed });
    }
    Ok(out)
}

/// Split on ` + ` outside brackets.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if c == '+' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out.into_iter().map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

pub fn printed_rules() -> Result<Vec<PrintedRule>> {
    parse_printed_rules(known::PRINTED_AMALGAMATION)
}

fn as_printed(cell: &[Transition]) -> Vec<PrintedTerm> {
    let mut v: Vec<PrintedTerm> = cell
        .iter()
        .map(|t| PrintedTerm { target: t.target.name().to_string(), shift: t.shift, multiplicity: t.multiplicity })
        .collect();
    v.sort();
    v
}

fn format_printed(terms: &[PrintedTerm]) -> String {
    terms
        .iter()
        .map(|t| {
            let m = if t.multiplicity == 1 { String::new() } else { t.multiplicity.to_string() };
            if t.shift == 0 {
                format!("{m}{}", t.target)
            } else {
                format!("{m}{}[{:+}]", t.target, t.shift)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Entry-by-entry differences between printed and regenerated tables.
#[derive(Clone, Debug, Default)]
pub struct TableDiff {
    pub amalgamation: Vec<(PedType, PedType, String, String)>,
    pub closure: Vec<(PedType, String, String)>,
    pub transfer_matrix: Vec<(PedType, PedType, String, String)>,
    pub unknown_names: Vec<String>,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.amalgamation.is_empty() && self.closure.is_empty() && self.transfer_matrix.is_empty()
    }

    pub fn report(&self) -> String {
        let mut s = String::new();
        writeln!(s, "amalgamation: {} of 100 cells differ", self.amalgamation.len()).ok();
        for (a, b, p, d) in &self.amalgamation {
            writeln!(s, "  {a} * {b}\tprinted {p}\tderived {d}").ok();
        }
        if !self.unknown_names.is_empty() {
            writeln!(s, "  printed names outside the ten types: {}", self.unknown_names.join(", ")).ok();
        }
        writeln!(s, "closure: {} of 10 rows differ", self.closure.len()).ok();
        for (a, p, d) in &self.closure {
            writeln!(s, "  {a}\tprinted {p}\tderived {d}").ok();
        }
        writeln!(s, "M(x): {} of 100 entries differ", self.transfer_matrix.len()).ok();
        for (a, b, p, d) in &self.transfer_matrix {
            writeln!(s, "  [{a}][{b}]\tprinted {p}\tderived {d}").ok();
        }
        s
    }
}

/// Compare `tables` with the reference transition tables and the reference M(x).
pub fn diff_against_printed(tables: &TransitionTables) -> Result<TableDiff> {
    let mut diff = TableDiff::default();
    let mut seen = BTreeMap::new();
    for rule in printed_rules()? {
        seen.insert((rule.first.index(), rule.second.index()), rule.terms.clone());
        for t in &rule.terms {
            if PedType::from_name(&t.target).is_none() && !diff.unknown_names.contains(&t.target) {
                diff.unknown_names.push(t.target.clone());
            }
        }
    }
    for (i, row) in tables.amalgamation.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let derived = as_printed(cell);
            let printed = seen.get(&(i, j)).cloned().unwrap_or_default();
            if printed != derived {
                diff.amalgamation.push((PedType::ALL[i], PedType::ALL[j], format_printed(&printed), format_cell(cell)));
            }
        }
    }
    let printed_close = known::printed_closure_column();
    for (i, (p, d)) in printed_close.iter().zip(tables.closure_column()).enumerate() {
        if *p != d {
            diff.closure.push((PedType::ALL[i], p.to_string(), d.to_string()));
        }
    }
    let printed_m = known::printed_transfer_matrix()?;
    let derived_m = tables.transfer_matrix(&super::ped::doubled_edge_vector());
    for i in 0..10 {
        for j in 0..10 {
            if printed_m[i][j] != derived_m[i][j] {
                diff.transfer_matrix.push((
                    PedType::ALL[i],
                    PedType::ALL[j],
                    printed_m[i][j].to_string(),
                    derived_m[i][j].to_string(),
                ));
            }
        }
    }
    Ok(diff)
}

/// `M(1)` as an integer matrix.
pub fn matrix_at_one(m: &[Vec<IntPoly>]) -> Vec<Vec<IntPoly>> {
    m.iter().map(|row| row.iter().map(|p| IntPoly::constant(p.coeff_sum())).collect()).collect()
}

/// Characteristic polynomial of `M(1)` as integer coefficients, constant term first.
pub fn charpoly_at_one(m: &[Vec<IntPoly>]) -> Vec<BigInt> {
    matrix_charpoly(&matrix_at_one(m)).iter().map(|c| c.coeff(0)).collect()
}

/// Multiplicity of `lambda` as a root of an integer polynomial (constant term first).
pub fn root_multiplicity(coeffs: &[BigInt], lambda: i64) -> usize {
    let mut c: Vec<BigInt> = coeffs.to_vec();
    let l = BigInt::from(lambda);
    let mut k = 0;
    while c.len() > 1 {
        // synthetic division by (t - lambda)
        let n = c.len() - 1;
        let mut q = vec![BigInt::zero(); n];
        let mut acc = BigInt::zero();
        for i in (0..=n).rev() {
            acc = &acc * &l + &c[i];
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        if !acc.is_zero() {
            break;
        }
        c = q;
        k += 1;
    }
    k
}

/// Primitivity of `M(1) / scale`.
pub fn scaled_primitivity(m: &[Vec<IntPoly>], scale: i64) -> Result<PrimitivityReport> {
    let s = BigRational::from_integer(scale.into());
    if s.is_zero() {
        return Err(Error::Invalid("scale must be nonzero".into()));
    }
    let q: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|p| BigRational::from_integer(p.coeff_sum()) / &s).collect())
        .collect();
    primitivity_check(&q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::ped::{derived_tables, doubled_edge_vector};

    #[test]
    fn printed_rules_parse() {
        let rules = printed_rules().unwrap();
        assert_eq!(rules.len(), 100);
        for r in &rules {
            let total: u64 = r.terms.iter().map(|t| t.multiplicity).sum();
            assert_eq!(total, 6, "{} * {}", r.first, r.second);
        }
        let t = parse_term("2ss2[+2]").unwrap();
        assert_eq!(t, PrintedTerm { target: "ss2".into(), shift: 2, multiplicity: 2 });
        assert_eq!(parse_term("dd'").unwrap().multiplicity, 1);
    }

    #[test]
    fn synthetic_division() {
        // (t - 12)^2 (t + 1) = t^3 - 23 t^2 + 120 t + 144
        let c: Vec<BigInt> = [144, 120, -23, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(root_multiplicity(&c, 12), 2);
        assert_eq!(root_multiplicity(&c, -1), 1);
        assert_eq!(root_multiplicity(&c, 3), 0);
    }

    #[test]
    fn derived_matrix_has_double_eigenvalue_twelve() {
        let tables = derived_tables().unwrap();
        let m = tables.transfer_matrix(&doubled_edge_vector());
        for row in &m {
            let s: BigInt = row.iter().map(|p| p.coeff_sum()).sum();
            assert_eq!(s, BigInt::from(12));
        }
        assert_eq!(root_multiplicity(&charpoly_at_one(&m), 12), 2);
        let rep = scaled_primitivity(&m, 12).unwrap();
        assert!(!rep.primitive);
    }

    #[test]
    fn diff_is_reported() {
        let d = diff_against_printed(derived_tables().unwrap()).unwrap();
        let r = d.report();
        assert!(r.contains("amalgamation:"));
        assert!(d.unknown_names.contains(&"ss'".to_string()));
    }
}

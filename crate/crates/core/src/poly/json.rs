//! JSON forms: a polynomial is `{"var": "x", "terms": [[exp, "num/den"], ...]}`
//! (the variable is omitted when it is `x`); a bivariate polynomial is the array
//! of its `t`-coefficients' term lists; a generating function is `{num, den}`.

use serde::{Deserialize, Serialize};

use super::bivar::{BivarPoly, RationalGF};
use super::laurent::{format_rational, parse_rational, LaurentPoly};
use crate::error::{Error, Result};

fn default_var() -> String {
    "x".into()
}

fn is_x(v: &String) -> bool {
    v == "x"
}

#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(default = "default_var", skip_serializing_if = "is_x")]
    pub var: String,
    pub terms: Vec<(i64, String)>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson { var: default_var(), terms: terms_of(p) }
    }
}

fn terms_of(p: &LaurentPoly) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (e, format_rational(c))).collect()
}

fn poly_of(terms: &[(i64, String)]) -> Result<LaurentPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        out.push((*e, parse_rational(c).ok_or_else(|| Error::Parse(format!("bad rational {c:?}")))?));
    }
    Ok(LaurentPoly::from_terms(out))
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = Error;
    fn try_from(j: &PolyJson) -> Result<Self> {
        poly_of(&j.terms)
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<LaurentPoly> {
    let j: PolyJson = serde_json::from_str(s)?;
    LaurentPoly::try_from(&j)
}

#[derive(Serialize, Deserialize)]
pub struct GfJson {
    pub num: Vec<Vec<(i64, String)>>,
    pub den: Vec<Vec<(i64, String)>>,
}

pub fn bivar_to_value(b: &BivarPoly) -> Vec<Vec<(i64, String)>> {
    b.coeffs().iter().map(terms_of).collect()
}

pub fn bivar_from_value(v: &[Vec<(i64, String)>]) -> Result<BivarPoly> {
    Ok(BivarPoly::from_coeffs(v.iter().map(|t| poly_of(t)).collect::<Result<_>>()?))
}

pub fn gf_to_json(gf: &RationalGF) -> String {
    serde_json::to_string(&GfJson { num: bivar_to_value(&gf.num), den: bivar_to_value(&gf.den) })
        .expect("serializable")
}

pub fn gf_from_json(s: &str) -> Result<RationalGF> {
    let j: GfJson = serde_json::from_str(s)?;
    RationalGF::new(bivar_from_value(&j.num)?, bivar_from_value(&j.den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expr::parse_gf;
    use crate::poly::laurent::rat;

    #[test]
    fn univariate_json_shape() {
        let p = LaurentPoly::from_i64s(&[4, 2]);
        assert_eq!(poly_to_json(&p), r#"{"terms":[[0,"4"],[1,"2"]]}"#);
        let q = LaurentPoly::monomial(rat(-3, 4), -1);
        assert_eq!(poly_from_json(&poly_to_json(&q)).unwrap(), q);
        assert_eq!(poly_from_json(r#"{"var":"x","terms":[[2,"1/2"]]}"#).unwrap(), LaurentPoly::monomial(rat(1, 2), 2));
    }

    #[test]
    fn gf_round_trip() {
        let gf = parse_gf("(2t + 3x t^2) / (1 - (1+x)t - 2x^2 t^3)").unwrap();
        assert_eq!(gf_from_json(&gf_to_json(&gf)).unwrap(), gf);
    }
}

//! The published linear recurrences for the double-edge cycles C_n^2.

use crate::error::{Error, Result};
use crate::groupring::Mode;
use crate::known;
use crate::poly::{extend_series, IntPoly};
use crate::transfer::{FamilySpec, TransferEngine};

/// Which recurrence to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cn2Recurrence {
    /// Order 6, genus.
    Genus,
    /// Order 10, Euler genus.
    Euler,
    /// Order 6, Euler genus.
    EulerReduced,
}

impl Cn2Recurrence {
    pub fn coefficients(self) -> Result<Vec<IntPoly>> {
        match self {
            Cn2Recurrence::Genus => known::genus_c2_recurrence(),
            Cn2Recurrence::Euler => known::euler_c2_recurrence(),
            Cn2Recurrence::EulerReduced => known::euler_c2_reduced_recurrence(),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Cn2Recurrence::Euler => 10,
            _ => 6,
        }
    }

    /// Printed initial values, as many as the order.
    pub fn printed_initial(self) -> Result<Vec<IntPoly>> {
        let all = match self {
            Cn2Recurrence::Genus => known::genus_c2()?,
            _ => known::euler_c2()?,
        };
        Ok(all[..self.order()].to_vec())
    }

    /// `a_1 .. a_n` from the given initial values.
    pub fn series(self, init: &[IntPoly], n: usize) -> Result<Vec<IntPoly>> {
        extend_series(&self.coefficients()?, init, n)
    }
}

/// `Γ_1 .. Γ_n` (genus) or `E_1 .. E_n` (Euler) from the printed coefficients and
/// printed initial values.
pub fn cn2_recurrences(mode: Mode, n: usize) -> Result<Vec<IntPoly>> {
    if n == 0 {
        return Err(Error::Invalid("need at least one term".into()));
    }
    let kind = match mode {
        Mode::Genus => Cn2Recurrence::Genus,
        Mode::Euler => Cn2Recurrence::Euler,
    };
    kind.series(&kind.printed_initial()?, n)
}

/// The same recurrences seeded with values computed by the transfer engine.
pub fn cn2_computed(mode: Mode, n: usize) -> Result<Vec<IntPoly>> {
    if n == 0 {
        return Err(Error::Invalid("need at least one term".into()));
    }
    let kind = match mode {
        Mode::Genus => Cn2Recurrence::Genus,
        Mode::Euler => Cn2Recurrence::EulerReduced,
    };
    let engine = TransferEngine::new(FamilySpec::doubled_cycle(mode))?;
    kind.series(&engine.family_series(kind.order())?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_prefixes() {
        assert_eq!(cn2_recurrences(Mode::Genus, 6).unwrap(), known::genus_c2().unwrap());
        assert_eq!(cn2_recurrences(Mode::Euler, 10).unwrap(), known::euler_c2().unwrap());
        assert!(cn2_recurrences(Mode::Genus, 0).is_err());
    }

    #[test]
    fn euler_orders_agree() {
        let full = cn2_recurrences(Mode::Euler, 30).unwrap();
        let reduced = Cn2Recurrence::EulerReduced.series(&full[..6], 30).unwrap();
        assert_eq!(full, reduced);
    }

    #[test]
    fn totals() {
        for (i, p) in cn2_recurrences(Mode::Genus, 20).unwrap().iter().enumerate() {
            assert_eq!(p.coeff_sum(), num_bigint::BigInt::from(6).pow(i as u32 + 1));
        }
        for (i, p) in cn2_recurrences(Mode::Euler, 20).unwrap().iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(p.coeff_sum(), num_bigint::BigInt::from(6).pow(n) * num_bigint::BigInt::from(2).pow(n + 1));
        }
    }

    #[test]
    fn computed_seeds() {
        assert_eq!(cn2_computed(Mode::Genus, 12).unwrap(), cn2_recurrences(Mode::Genus, 12).unwrap());
        let e = cn2_computed(Mode::Euler, 12).unwrap();
        let printed = known::euler_c2().unwrap();
        assert_eq!(e[..3], printed[..3]);
        assert_ne!(e[3], printed[3]);
        let engine = TransferEngine::new(FamilySpec::doubled_cycle(Mode::Euler)).unwrap();
        assert_eq!(engine.family_series(12).unwrap(), e);
        let full = Cn2Recurrence::Euler.series(&e[..10], 12).unwrap();
        assert_eq!(full, e);
    }
}

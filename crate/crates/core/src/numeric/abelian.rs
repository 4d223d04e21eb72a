use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_t` with `d₁ | d₂ | … | d_t` and every `dᵢ >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianGroupForm {
    free_rank: u64,
    invariant_factors: Vec<u128>,
}

impl AbelianGroupForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: u64) -> Self {
        Self {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// Direct sum of `Z^free_rank` with the cyclic groups of the given orders.
    /// Orders equal to 1 contribute nothing; 0 is rejected.
    pub fn from_parts(free_rank: u64, cyclic_orders: &[u128]) -> Result<Self> {
        if cyclic_orders.contains(&0) {
            return Err(Error::InvalidArgument(
                "cyclic order 0; use the free rank for Z summands".into(),
            ));
        }
        let nontrivial: Vec<u128> = cyclic_orders.iter().copied().filter(|&d| d > 1).collect();
        let mut form = if nontrivial.is_empty() {
            Self::zero()
        } else {
            invariant_factors(&nontrivial)?
        };
        form.free_rank = free_rank;
        Ok(form)
    }

    pub fn free_rank(&self) -> u64 {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[u128] {
        &self.invariant_factors
    }

    /// Order of the torsion subgroup; `None` on overflow.
    pub fn torsion_order(&self) -> Option<u128> {
        self.invariant_factors
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d))
    }

    pub fn torsion(&self) -> Self {
        Self {
            free_rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }
}

impl fmt::Display for AbelianGroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        // Group repeated factors as Z_d^e.
        let mut i = 0;
        let fs = &self.invariant_factors;
        while i < fs.len() {
            let mut j = i;
            while j < fs.len() && fs[j] == fs[i] {
                j += 1;
            }
            match j - i {
                1 => parts.push(format!("Z_{}", fs[i])),
                e => parts.push(format!("Z_{}^{}", fs[i], e)),
            }
            i = j;
        }
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for AbelianGroupForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AbelianGroupForm", 3)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.serialize_field("invariant_factors", &self.invariant_factors)?;
        s.serialize_field("display", &self.to_string())?;
        s.end()
    }
}

/// Divisibility-chain form of `Z/n₁ ⊕ … ⊕ Z/n_s`.
///
/// Sweeps `(nᵢ, nⱼ) -> (gcd, lcm)` over all `i < j`, which leaves every entry
/// dividing the ones after it, then drops the trivial factors.
pub fn invariant_factors(orders: &[u128]) -> Result<AbelianGroupForm> {
    if let Some(&bad) = orders.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidArgument(format!(
            "cyclic orders must be >= 2, got {bad}"
        )));
    }
    let mut d = orders.to_vec();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = (d[i] / g)
                .checked_mul(d[j])
                .ok_or(Error::Overflow("invariant factors"))?;
            d[i] = g;
            d[j] = l;
        }
    }
    d.retain(|&x| x > 1);
    Ok(AbelianGroupForm {
        free_rank: 0,
        invariant_factors: d,
    })
}

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Yes / no / open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Admissibility {
    Yes,
    No,
    Unknown,
}

/// The regular Sasaki factor `M`, named by its Kähler–Einstein quotient `N`
/// (or by `M` itself where that is the usual name).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// `S^(2r+1)` over `CP^r`.
    Sphere { r: u32 },
    /// `S^5` over `CP^2`.
    Cp2,
    /// `S^2 × S^3` over `CP^1 × CP^1`.
    Cp1xCp1,
    /// `k(S^2 × S^3)` over `CP^2 # k(-CP^2)`, `1 <= k <= 8`.
    DelPezzo { k: u8 },
    /// Circle bundle over the Fermat hypersurface of degree `d` in `CP^(n+1)`.
    FermatBundle { d: u32, n: u32 },
    /// `V_2(R^(2n+1))` over the odd quadric `Q_(2n-1)`.
    Stiefel { n: u32 },
    /// The homogeneous 3-Sasakian 11-manifold `G2/Sp(1)+`.
    G2Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BaseManifold {
    kind: BaseKind,
    fano_index: u64,
    b2: u64,
    dim: u32,
    ke: Admissibility,
}

impl BaseManifold {
    pub fn sphere(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidBase(
                "S^1 (r = 0) has no Kähler–Einstein quotient".into(),
            ));
        }
        Ok(Self {
            kind: BaseKind::Sphere { r },
            fano_index: r as u64 + 1,
            b2: 1,
            dim: 2 * r + 1,
            ke: Admissibility::Yes,
        })
    }

    pub fn cp2() -> Self {
        Self {
            kind: BaseKind::Cp2,
            fano_index: 3,
            b2: 1,
            dim: 5,
            ke: Admissibility::Yes,
        }
    }

    pub fn cp1xcp1() -> Self {
        Self {
            kind: BaseKind::Cp1xCp1,
            fano_index: 2,
            b2: 2,
            dim: 5,
            ke: Admissibility::Yes,
        }
    }

    /// Only `k >= 3` carries a Kähler–Einstein metric; `k = 1, 2` are kept in
    /// the catalog for their topology.
    pub fn del_pezzo(k: u8) -> Result<Self> {
        if !(1..=8).contains(&k) {
            return Err(Error::InvalidBase(format!(
                "del Pezzo index k={k} outside 1..=8"
            )));
        }
        Ok(Self {
            kind: BaseKind::DelPezzo { k },
            fano_index: 1,
            b2: k as u64 + 1,
            dim: 5,
            ke: if k >= 3 {
                Admissibility::Yes
            } else {
                Admissibility::No
            },
        })
    }

    pub fn fermat(d: u32, n: u32) -> Result<Self> {
        if d < 2 || n < 2 {
            return Err(Error::InvalidBase(format!(
                "Fermat parameters need d >= 2 and n >= 2, got d={d}, n={n}"
            )));
        }
        if d > n + 1 {
            return Err(Error::InvalidBase(format!(
                "Fermat hypersurface with d={d} > n+1={} is not Fano",
                n + 1
            )));
        }
        let b2 = if n == 2 {
            fermat_middle_betti(d, n)?
                .middle_rank
                .to_u64()
                .ok_or(Error::Overflow("b2"))?
        } else {
            1
        };
        let ke = if d == 2 || 2 * d > n {
            Admissibility::Yes
        } else {
            Admissibility::Unknown
        };
        Ok(Self {
            kind: BaseKind::FermatBundle { d, n },
            fano_index: (n + 2 - d) as u64,
            b2,
            dim: 2 * n + 1,
            ke,
        })
    }

    pub fn stiefel(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBase("Stiefel index n must be >= 1".into()));
        }
        Ok(Self {
            kind: BaseKind::Stiefel { n },
            fano_index: 2 * n as u64 - 1,
            b2: 1,
            dim: 4 * n - 1,
            ke: Admissibility::Yes,
        })
    }

    pub fn g2_plus() -> Self {
        Self {
            kind: BaseKind::G2Plus,
            fano_index: 3,
            b2: 1,
            dim: 11,
            ke: Admissibility::Yes,
        }
    }

    pub fn kind(&self) -> BaseKind {
        self.kind
    }

    pub fn fano_index(&self) -> u64 {
        self.fano_index
    }

    pub fn b2(&self) -> u64 {
        self.b2
    }

    /// Dimension of `M` (odd).
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn ke_admissible(&self) -> Admissibility {
        self.ke
    }

    /// The join with `S^3_w` has dimension `dim M + 2`.
    pub fn join_dim(&self) -> u32 {
        self.dim + 2
    }
}

impl fmt::Display for BaseManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BaseKind::Sphere { r } => write!(f, "S{}", 2 * r + 1),
            BaseKind::Cp2 => f.write_str("CP2"),
            BaseKind::Cp1xCp1 => f.write_str("CP1xCP1"),
            BaseKind::DelPezzo { k } => write!(f, "dP:{k}"),
            BaseKind::FermatBundle { d, n } => write!(f, "fermat:{d},{n}"),
            BaseKind::Stiefel { n } => write!(f, "stiefel:{n}"),
            BaseKind::G2Plus => f.write_str("G2+"),
        }
    }
}

impl FromStr for BaseManifold {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| -> Result<u32> {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidBase(format!("bad number {t:?} in {s:?}")))
        };
        match s {
            "CP2" => return Ok(Self::cp2()),
            "CP1xCP1" => return Ok(Self::cp1xcp1()),
            "G2+" => return Ok(Self::g2_plus()),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("dP:") {
            let k = num(k)?;
            return Self::del_pezzo(u8::try_from(k).unwrap_or(u8::MAX));
        }
        if let Some(rest) = s.strip_prefix("fermat:") {
            let (d, n) = rest
                .split_once(',')
                .ok_or_else(|| Error::InvalidBase(format!("expected fermat:<d>,<n>, got {s:?}")))?;
            return Self::fermat(num(d)?, num(n)?);
        }
        if let Some(n) = s.strip_prefix("stiefel:") {
            return Self::stiefel(num(n)?);
        }
        if let Some(dim) = s.strip_prefix('S') {
            let dim = num(dim)?;
            if dim % 2 == 0 {
                return Err(Error::InvalidBase(format!(
                    "sphere dimension {dim} is even"
                )));
            }
            return Self::sphere(dim / 2);
        }
        Err(Error::InvalidBase(format!(
            "unknown base {s:?}; expected S<odd>, CP2, CP1xCP1, dP:<k>, fermat:<d>,<n>, stiefel:<n> or G2+"
        )))
    }
}

impl Serialize for BaseManifold {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("BaseManifold", 5)?;
        s.serialize_field("name", &self.to_string())?;
        s.serialize_field("fano_index", &self.fano_index)?;
        s.serialize_field("b2", &self.b2)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("ke_admissible", &self.ke)?;
        s.end()
    }
}

/// Middle Betti data of the Fermat hypersurface `F_{d,n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MiddleBetti {
    #[serde(serialize_with = "crate::report::big_number")]
    pub b_n: BigUint,
    /// Rank of `H^n`: `b_n`, plus one for the hyperplane power when `n` is even.
    #[serde(serialize_with = "crate::report::big_number")]
    pub middle_rank: BigUint,
}

/// `b_n = (-1)^n (1 + ((1-d)^(n+2) - 1) / d)`.
pub fn fermat_middle_betti(d: u32, n: u32) -> Result<MiddleBetti> {
    if d < 2 || n < 2 || d > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "fermat_middle_betti needs 2 <= d <= n+1 and n >= 2, got d={d}, n={n}"
        )));
    }
    let d_big = BigInt::from(d);
    let power = num_traits::pow(BigInt::one() - &d_big, n as usize + 2);
    let numerator = power - BigInt::one();
    if (&numerator % &d_big) != BigInt::from(0) {
        return Err(Error::Invariant(format!(
            "(1-d)^(n+2) - 1 not divisible by d={d}"
        )));
    }
    let mut b = BigInt::one() + numerator / &d_big;
    if n % 2 == 1 {
        b = -b;
    }
    if b.is_negative() {
        return Err(Error::Invariant(format!(
            "negative middle Betti number for d={d}, n={n}"
        )));
    }
    let b_n = b.to_biguint().expect("non-negative");
    let middle_rank = if n.is_multiple_of(2) {
        &b_n + 1u32
    } else {
        b_n.clone()
    };
    Ok(MiddleBetti { b_n, middle_rank })
}

use num_bigint::BigInt;
use serde::Serialize;

use crate::asymptotics::MomentKind;
use crate::enumerate::{Family, RankTable};

/// `Σ_m m^k f(m,n)` (or `|m|^k`) for every `n` of a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentVector {
    pub family: Family,
    pub k: u32,
    pub kind: MomentKind,
    #[serde(serialize_with = "serialize_decimal")]
    pub values: Vec<BigInt>,
}

fn serialize_decimal<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl MomentVector {
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }

    /// First `n` with `value(n) > value(n+1)`, if any.
    pub fn first_decrease(&self) -> Option<usize> {
        self.values.windows(2).position(|w| w[0] > w[1])
    }
}

pub fn moments(table: &RankTable, k: u32, kind: MomentKind) -> MomentVector {
    let values = table
        .rows()
        .iter()
        .map(|row| match kind {
            MomentKind::Signed => row.moment(k),
            MomentKind::Absolute => row.abs_moment(k),
        })
        .collect();
    MomentVector {
        family: table.family(),
        k,
        kind,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::build_unimodal_table;
    use num_traits::Zero;

    #[test]
    fn unimodal_small_moments() {
        let t = build_unimodal_table(12);
        let m0 = moments(&t, 0, MomentKind::Signed);
        assert_eq!(m0.values[3], BigInt::from(6));
        let m1 = moments(&t, 1, MomentKind::Signed);
        assert!(m1.values.iter().all(Zero::is_zero));
        let m2 = moments(&t, 2, MomentKind::Signed);
        assert_eq!(m2.values[3], BigInt::from(10));
        assert_eq!(m2.first_decrease(), None);
        assert_eq!(moments(&t, 2, MomentKind::Absolute), MomentVector { kind: MomentKind::Absolute, ..m2 });
    }
}

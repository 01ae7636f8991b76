//! Closed-form predictions for the intersection hypergraph of `Z_n`, read
//! off the sorted exponent signature of `n`. Prime values never matter.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Factorization;
use crate::metrics::{Diameter, GirthValue};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_empty: bool,
    pub single_edge: bool,
    pub diameter: Diameter,
    /// `None` only for the empty hypergraph; encoded as `"undefined"`.
    #[serde(with = "optional_girth")]
    pub girth: Option<GirthValue>,
    pub chromatic: u32,
    pub star: bool,
    pub hypertree: bool,
    pub planar: bool,
    pub genus_one: bool,
    pub crosscap_one: bool,
    pub toroidal: bool,
    pub projective: bool,
}

impl Classification {
    /// The structural implications between fields.
    pub fn is_consistent(&self) -> bool {
        (!self.star || self.hypertree)
            && !(self.planar && self.genus_one)
            && !(self.planar && self.crosscap_one)
            && self.toroidal == (self.planar || self.genus_one)
            && self.projective == (self.planar || self.crosscap_one)
            && (!self.is_empty
                || (self.diameter == Diameter::Undefined
                    && self.girth.is_none()
                    && self.chromatic == 0))
    }
}

mod optional_girth {
    use super::*;

    pub fn serialize<S: Serializer>(g: &Option<GirthValue>, s: S) -> Result<S::Ok, S::Error> {
        match g {
            Some(g) => g.serialize(s),
            None => s.serialize_str("undefined"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<GirthValue>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u32),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Number(k) => Ok(Some(GirthValue::Finite(k))),
            Raw::Word(w) if w == "infinite" => Ok(Some(GirthValue::Infinite)),
            Raw::Word(w) if w == "undefined" => Ok(None),
            Raw::Word(w) => Err(serde::de::Error::custom(format!("bad girth {w:?}"))),
        }
    }
}

pub fn predict(f: &Factorization) -> Classification {
    predict_signature(&f.exponent_signature())
}

/// Prediction from an exponent signature sorted in descending order.
pub fn predict_signature(sig: &[u32]) -> Classification {
    debug_assert!(sig.windows(2).all(|w| w[0] >= w[1]));
    let omega = sig.len();
    if omega <= 1 {
        return Classification {
            is_empty: true,
            single_edge: false,
            diameter: Diameter::Undefined,
            girth: None,
            chromatic: 0,
            star: false,
            hypertree: false,
            planar: false,
            genus_one: false,
            crosscap_one: false,
            toroidal: false,
            projective: false,
        };
    }

    let min = sig[omega - 1];
    let single_edge = sig == [1, 1];
    let diameter = Diameter::Finite(match omega {
        2 if single_edge => 1,
        2 => 2,
        _ => 3,
    });
    let girth = if (omega == 2 && min == 1) || sig == [1, 1, 1] {
        GirthValue::Infinite
    } else if omega == 2 {
        GirthValue::Finite(4)
    } else {
        GirthValue::Finite(2)
    };
    let star = omega == 2 && min == 1;
    let hypertree = star || sig == [1, 1, 1];
    let planar = (omega == 2 && min <= 2) || sig == [1, 1, 1] || sig == [2, 1, 1];
    let genus_one = match sig {
        [a, 3] => (3..=6).contains(a),
        [4, 4] => true,
        [b, 1, 1] => (3..=5).contains(b),
        _ => false,
    };
    let crosscap_one = matches!(sig, [3, 3] | [4, 3] | [3, 1, 1] | [4, 1, 1]);

    Classification {
        is_empty: false,
        single_edge,
        diameter,
        girth: Some(girth),
        chromatic: 2,
        star,
        hypertree,
        planar,
        genus_one,
        crosscap_one,
        toroidal: planar || genus_one,
        projective: planar || crosscap_one,
    }
}

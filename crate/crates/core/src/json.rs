//! Serde adapters that write big integers as plain JSON numbers.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

fn to_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integer is a JSON number")
}

fn from_number<E: serde::de::Error>(n: &Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("expected an integer, got {n}")))
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number(&Number::deserialize(d)?)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_number))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?.iter().map(from_number).collect()
    }
}

pub mod bigint_map {
    use super::*;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u64, BigInt>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), to_number(v))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, BigInt>, D::Error> {
        BTreeMap::<String, Number>::deserialize(d)?
            .iter()
            .map(|(k, v)| {
                let key = k.parse::<u64>().map_err(|_| D::Error::custom(format!("bad key {k}")))?;
                Ok((key, from_number(v)?))
            })
            .collect()
    }
}

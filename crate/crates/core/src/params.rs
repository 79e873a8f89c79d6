//! `name:key=value,key=value` strings used to name algorithms, adversaries
//! and generators on the command line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::Value;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("malformed parameter `{0}` (expected key=value)")]
    Malformed(String),
    #[error("missing parameter `{key}` for `{name}`")]
    Missing { name: String, key: String },
    #[error("bad value `{value}` for `{key}`: {reason}")]
    BadValue { key: String, value: String, reason: String },
    #[error("unknown parameter `{key}` for `{name}`")]
    Unknown { name: String, key: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedParams {
    pub name: String,
    params: BTreeMap<String, String>,
}

impl NamedParams {
    pub fn parse(spec: &str) -> Result<Self, ParamError> {
        let (name, rest) = match spec.split_once(':') {
            Some((name, rest)) => (name, rest),
            None => (spec, ""),
        };
        let mut params = BTreeMap::new();
        for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = pair.split_once('=').ok_or_else(|| ParamError::Malformed(pair.to_string()))?;
            params.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(NamedParams { name: name.trim().to_string(), params })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, ParamError>
    where
        T::Err: fmt::Display,
    {
        self.params
            .get(key)
            .map(|v| {
                v.parse::<T>().map_err(|e| ParamError::BadValue {
                    key: key.to_string(),
                    value: v.clone(),
                    reason: e.to_string(),
                })
            })
            .transpose()
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, ParamError>
    where
        T::Err: fmt::Display,
    {
        Ok(self.get(key)?.unwrap_or(default))
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T, ParamError>
    where
        T::Err: fmt::Display,
    {
        self.get(key)?.ok_or_else(|| ParamError::Missing { name: self.name.clone(), key: key.to_string() })
    }

    /// An exact rational from a decimal (`2.05`) or fraction (`41/20`) string.
    pub fn get_rational(&self, key: &str) -> Result<Option<Value>, ParamError> {
        self.params
            .get(key)
            .map(|v| {
                parse_rational(v).ok_or_else(|| ParamError::BadValue {
                    key: key.to_string(),
                    value: v.clone(),
                    reason: "expected a decimal or p/q".to_string(),
                })
            })
            .transpose()
    }

    /// Fails on any key outside `allowed`.
    pub fn only(&self, allowed: &[&str]) -> Result<(), ParamError> {
        match self.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(ParamError::Unknown { name: self.name.clone(), key: k.clone() }),
            None => Ok(()),
        }
    }
}

/// Parses `3`, `-1.25`, `7/4` exactly.
pub fn parse_rational(s: &str) -> Option<Value> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let (p, q) = (p.trim().parse::<i64>().ok()?, q.trim().parse::<i64>().ok()?);
        return (q != 0).then(|| Value::new(p, q));
    }
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    if frac.len() > 12 {
        return None;
    }
    let scale = 10i64.pow(frac.len() as u32);
    let whole: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let part: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let v = Value::new(whole.checked_mul(scale)?.checked_add(part)?, scale);
    Some(if negative { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names_and_params() {
        let p = NamedParams::parse("is.threshold:c=3").unwrap();
        assert_eq!(p.name, "is.threshold");
        assert_eq!(p.require::<usize>("c").unwrap(), 3);
        assert!(p.require::<usize>("b").is_err());
        assert!(p.only(&["c"]).is_ok());
        assert!(p.only(&["b"]).is_err());

        let p = NamedParams::parse("adv.is.bags:c=2.0, eps=0.05,n1=200").unwrap();
        assert_eq!(p.get_rational("c").unwrap(), Some(Value::from_integer(2)));
        assert_eq!(p.get_rational("eps").unwrap(), Some(Value::new(1, 20)));
        assert!(NamedParams::parse("x:novalue").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("2.598"), Some(Value::new(2598, 1000)));
        assert_eq!(parse_rational("-1.5"), Some(Value::new(-3, 2)));
        assert_eq!(parse_rational("3/2"), Some(Value::new(3, 2)));
        assert_eq!(parse_rational(".5"), Some(Value::new(1, 2)));
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1/0"), None);
    }
}

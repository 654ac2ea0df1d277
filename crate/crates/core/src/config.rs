//! Plain `key = value` session configuration. Keys: `domain`, `a0`, `a1`.
//! Blank lines and `#` comments are ignored.

use thiserror::Error;

use crate::domain::DomainKind;
use crate::eval::{self, Session};
use crate::pair::Seeds;
use crate::sexp::{self, Sexp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {0}: expected key = value")]
    Malformed(usize),
    #[error("line {0}: unknown key {1}")]
    UnknownKey(usize, String),
    #[error("line {0}: unknown domain {1}")]
    UnknownDomain(usize, String),
    #[error("line {0}: bad atom literal: {1}")]
    BadAtom(usize, String),
    #[error("seeds: {0}")]
    Seeds(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub domain: DomainKind,
    pub seeds: Option<Seeds>,
}

impl Config {
    pub fn defaults(domain: DomainKind) -> Config {
        Config { domain, seeds: Seeds::for_domain(domain).ok() }
    }

    /// Parse a config; `fallback` is the domain used when the text names none.
    pub fn parse(text: &str, fallback: DomainKind) -> Result<Config, ConfigError> {
        let mut domain = fallback;
        let (mut a0, mut a1) = (None, None);
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Malformed(n))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "domain" => {
                    domain = DomainKind::from_name(value).ok_or_else(|| ConfigError::UnknownDomain(n, value.into()))?
                }
                "a0" => a0 = Some(atom(n, value)?),
                "a1" => a1 = Some(atom(n, value)?),
                other => return Err(ConfigError::UnknownKey(n, other.into())),
            }
        }
        let seeds = match (a0, a1) {
            (None, None) => Seeds::for_domain(domain).ok(),
            (Some(a0), Some(a1)) => {
                if a0.kind() != domain || a1.kind() != domain {
                    return Err(ConfigError::Seeds(format!("seeds must be {domain} atoms")));
                }
                Some(Seeds::new(a0, a1).map_err(|e| ConfigError::Seeds(e.to_string()))?)
            }
            _ => return Err(ConfigError::Seeds("give both a0 and a1 or neither".into())),
        };
        Ok(Config { domain, seeds })
    }

    pub fn session(&self) -> Session {
        Session::with_seeds(self.domain, self.seeds.clone())
    }
}

fn atom(line: usize, text: &str) -> Result<crate::domain::Atom, ConfigError> {
    let bad = |msg: String| ConfigError::BadAtom(line, msg);
    let exprs = sexp::parse_all(text).map_err(|e| bad(e.to_string()))?;
    match exprs.as_slice() {
        [e @ Sexp::List { items, .. }] if e.head() == Some("at") => {
            eval::parse_atom(e, &items[1..]).map_err(|e| bad(e.to_string()))
        }
        _ => Err(bad(text.into())),
    }
}

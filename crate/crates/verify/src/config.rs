use serde::{Deserialize, Serialize};

use crate::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Relations,
    Torsion,
    Theorem,
    Modp,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Relations => "relations",
            Check::Torsion => "torsion",
            Check::Theorem => "theorem",
            Check::Modp => "modp",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

pub const DEFAULT_ENUM_CAP: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub genus: usize,
    /// Sorted and deduplicated by [`RunConfig::new`].
    pub checks: Vec<Check>,
    pub prime: Option<u32>,
    pub output: OutputFormat,
    /// `None` uses the genus-dependent default.
    pub orbit_cap: Option<usize>,
    pub enum_cap: u64,
    pub witness: bool,
}

impl RunConfig {
    /// An empty `checks` list selects every check that applies: relations
    /// always, torsion and theorem from genus 3, modp when a prime is given.
    pub fn new(genus: usize, checks: &[Check], prime: Option<u32>) -> Result<Self, VerifyError> {
        if genus < 2 {
            return Err(VerifyError::Config(format!("genus must be at least 2, got {genus}")));
        }
        let mut checks = if checks.is_empty() {
            let mut v = vec![Check::Relations];
            if genus >= 3 {
                v.extend([Check::Torsion, Check::Theorem]);
            }
            if prime.is_some() {
                v.push(Check::Modp);
            }
            v
        } else {
            checks.to_vec()
        };
        checks.sort();
        checks.dedup();
        let wants_modp = checks.contains(&Check::Modp);
        match (wants_modp, prime) {
            (true, None) => return Err(VerifyError::Config("--checks modp needs --prime".into())),
            (false, Some(_)) => return Err(VerifyError::Config("--prime is only used by the modp check".into())),
            _ => {}
        }
        if genus < 3 {
            if let Some(c) = checks.iter().find(|c| **c != Check::Relations) {
                return Err(VerifyError::Config(format!("the {} check needs genus at least 3, got {genus}", c.name())));
            }
        }
        Ok(Self {
            genus,
            checks,
            prime,
            output: OutputFormat::Text,
            orbit_cap: None,
            enum_cap: DEFAULT_ENUM_CAP,
            witness: false,
        })
    }

    pub fn orbit_cap(&self) -> usize {
        self.orbit_cap.unwrap_or_else(|| torsion_mcg::verify::default_orbit_cap(self.genus))
    }
}

use clap::ValueEnum;
use evenzeta::{OracleEstimate, PiValue};
use serde::{Deserialize, Serialize};

/// Route used to obtain a value. `corollary` marks closed-form row sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem1,
    Theorem3,
    Series,
    Symfunc,
    Oracle,
    #[value(skip)]
    Corollary,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem1 => "theorem1",
            Method::Theorem3 => "theorem3",
            Method::Series => "series",
            Method::Symfunc => "symfunc",
            Method::Oracle => "oracle",
            Method::Corollary => "corollary",
        }
    }
}

/// One machine-readable result row. Field order is the CSV column order.
///
/// `depth = 0` denotes the row sum over all depths. Oracle rows have no
/// exact coefficient, so `coeff_num`/`coeff_den` are null (empty in CSV).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub weight: u32,
    pub depth: u32,
    pub pi_power: u32,
    pub coeff_num: Option<String>,
    pub coeff_den: Option<String>,
    pub float_value: String,
    pub method: Method,
    #[serde(skip)]
    pub note: Option<String>,
}

impl OutputRecord {
    /// Record for `value = c·π^{2n}`.
    pub fn exact(n: u32, depth: u32, value: &PiValue, method: Method, digits: usize) -> Self {
        let c = value.coeff(n);
        debug_assert_eq!(value, &PiValue::monomial(c.clone(), n));
        OutputRecord {
            weight: 2 * n,
            depth,
            pi_power: 2 * n,
            coeff_num: Some(c.numer().to_string()),
            coeff_den: Some(c.denom().to_string()),
            float_value: value.to_decimal(digits),
            method,
            note: None,
        }
    }

    pub fn numeric(n: u32, depth: u32, est: OracleEstimate) -> Self {
        OutputRecord {
            weight: 2 * n,
            depth,
            pi_power: 2 * n,
            coeff_num: None,
            coeff_den: None,
            float_value: format!("{:.15e}", est.value),
            method: Method::Oracle,
            note: Some(format!(
                "error hint {:.2e}, L={}{}",
                est.error_hint,
                est.limit,
                if est.extrapolated {
                    ", extrapolated"
                } else {
                    ""
                }
            )),
        }
    }

    /// Exact value in the `a/b*pi^m` string form, if any.
    pub fn exact_string(&self) -> Option<String> {
        let (num, den) = (self.coeff_num.as_ref()?, self.coeff_den.as_ref()?);
        let coeff = if den == "1" {
            num.clone()
        } else {
            format!("{num}/{den}")
        };
        Some(if self.pi_power == 0 {
            coeff
        } else {
            format!("{coeff}*pi^{}", self.pi_power)
        })
    }

    fn label(&self) -> String {
        if self.depth == 0 {
            format!("row-sum({})", self.weight)
        } else {
            format!("E({},{})", self.weight, self.depth)
        }
    }

    /// One-line table form, e.g. `E(4,2) = 1/120*pi^4  ~ 0.811…`.
    pub fn human(&self) -> String {
        match self.exact_string() {
            Some(exact) => format!("{} = {exact}  ~ {}", self.label(), self.float_value),
            None => format!(
                "{} ~ {}  [{}]",
                self.label(),
                self.float_value,
                self.note.as_deref().unwrap_or("oracle")
            ),
        }
    }

    /// Output of `value --format human`: the exact string, then the decimal.
    pub fn human_single(&self) -> String {
        match self.exact_string() {
            Some(exact) => format!("{exact}\n~ {}\n", self.float_value),
            None => format!(
                "~ {}\n[{}]\n",
                self.float_value,
                self.note.as_deref().unwrap_or("oracle")
            ),
        }
    }
}

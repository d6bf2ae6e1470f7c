use serde::Serialize;

/// Outcome of one verification, serialized as
/// `{check, m, N, status, first_mismatch_order?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub m: u32,
    #[serde(rename = "N")]
    pub order: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl CheckReport {
    pub fn pass(check: &str, m: u32, order: usize) -> Self {
        CheckReport {
            check: check.into(),
            m,
            order,
            status: Status::Pass,
            first_mismatch_order: None,
            detail: None,
        }
    }

    pub fn fail(check: &str, m: u32, order: usize, at: Option<usize>, detail: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            m,
            order,
            status: Status::Fail,
            first_mismatch_order: at,
            detail: Some(detail.into()),
        }
    }

    /// Pass unless `mismatch` names an order.
    pub fn from_mismatch(check: &str, m: u32, order: usize, mismatch: Option<usize>) -> Self {
        match mismatch {
            None => Self::pass(check, m, order),
            Some(i) => Self::fail(check, m, order, Some(i), format!("series differ at order {i}")),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Combines several reports for the same check into one.
pub fn merge(check: &str, m: u32, order: usize, parts: &[CheckReport]) -> CheckReport {
    match parts.iter().find(|r| !r.passed()) {
        None => CheckReport::pass(check, m, order),
        Some(bad) => CheckReport {
            check: check.into(),
            m,
            order,
            status: Status::Fail,
            first_mismatch_order: bad.first_mismatch_order,
            detail: Some(format!(
                "{}: {}",
                bad.check,
                bad.detail.clone().unwrap_or_default()
            )),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = CheckReport::pass("lagrange", 2, 6);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"lagrange","m":2,"N":6,"status":"pass"}"#
        );
        let f = CheckReport::from_mismatch("x", 1, 4, Some(3));
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains(r#""status":"fail","first_mismatch_order":3"#));
    }
}

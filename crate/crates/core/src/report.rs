//! Line-oriented `key: value` certificate reports.

use std::fmt::{self, Display};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub claim: String,
    pub fields: Vec<(String, String)>,
    /// `true` when the claimed statement was confirmed.
    pub holds: bool,
    pub witnesses: Vec<String>,
    pub notices: Vec<String>,
    /// Free-form payload printed after a `---` line (vectors, listings).
    pub attachment: Option<String>,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            fields: Vec::new(),
            holds: true,
            witnesses: Vec::new(),
            notices: Vec::new(),
            attachment: None,
        }
    }

    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    /// Inserts header fields ahead of the existing ones.
    /// Body fields repeating a header entry verbatim are dropped.
    pub fn prepend(&mut self, header: Vec<(String, String)>) {
        let rest = std::mem::take(&mut self.fields);
        self.fields = header;
        for f in rest {
            if !self.fields.contains(&f) {
                self.fields.push(f);
            }
        }
    }

    pub fn witness(&mut self, w: impl Into<String>) -> &mut Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn notice(&mut self, n: impl Into<String>) -> &mut Self {
        self.notices.push(n.into());
        self
    }

    /// Records a sub-check; the report holds only if every sub-check does.
    pub fn require(&mut self, key: &str, ok: bool) -> &mut Self {
        self.holds &= ok;
        self.field(key, ok)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn verdict(&self) -> &'static str {
        if self.holds {
            "confirmed"
        } else {
            "violated"
        }
    }

    /// 0 when the claim holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.holds {
            0
        } else {
            1
        }
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        for n in &self.notices {
            writeln!(f, "notice: {n}")?;
        }
        writeln!(f, "verdict: {}", self.verdict())?;
        writeln!(f, "witnesses: {}", self.witnesses.len())?;
        for w in &self.witnesses {
            writeln!(f, "  - {w}")?;
        }
        if let Some(a) = &self.attachment {
            writeln!(f, "---")?;
            f.write_str(a)?;
            if !a.is_empty() && !a.ends_with('\n') {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_verdict() {
        let mut r = Report::new("demo");
        r.field("n", 7).require("ok", true);
        r.prepend(vec![("algebra".into(), "f2".into())]);
        assert_eq!(
            r.to_string(),
            "claim: demo\nalgebra: f2\nn: 7\nok: true\nverdict: confirmed\nwitnesses: 0\n"
        );
        r.require("other", false).witness("x");
        assert_eq!(r.exit_code(), 1);
        assert!(r.to_string().ends_with("verdict: violated\nwitnesses: 1\n  - x\n"));
        assert_eq!(r.get("n"), Some("7"));
    }
}

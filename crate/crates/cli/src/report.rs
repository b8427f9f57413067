use std::fmt::Display;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
        }
    }
}

/// What a subcommand prints: parameters in, string-valued results out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            verdict: Verdict::Info,
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.inputs.insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.results.insert(key.into(), Value::String(value.to_string()));
        self
    }

    pub fn list<T: Display>(&mut self, key: impl Into<String>, values: impl IntoIterator<Item = T>) -> &mut Self {
        let joined: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
        self.result(key, joined.join(" "))
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Fail => 1,
            _ => 0,
        }
    }

    pub fn emit(&self, json: bool, out: &mut impl Write) -> io::Result<()> {
        if json {
            serde_json::to_writer(&mut *out, self)?;
            return writeln!(out);
        }
        for (k, v) in &self.results {
            match v {
                Value::String(s) => writeln!(out, "{k}\t{s}")?,
                other => writeln!(out, "{k}\t{other}")?,
            }
        }
        writeln!(out, "verdict\t{}", self.verdict.label())?;
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "elapsed_ms\t{ms}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = RunReport::new("discharge");
        r.input("beta", 10).result("total.R1", "-8").result("min", "-2/5");
        r.verdict = Verdict::Pass;
        r.elapsed_ms = Some(3);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"PASS\""));
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let keys: Vec<&String> = back.results.keys().collect();
        assert_eq!(keys, ["total.R1", "min"]);
    }

    #[test]
    fn text_lines() {
        let mut r = RunReport::new("chromatic");
        r.result("chi", 9);
        let mut buf = Vec::new();
        r.emit(false, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "chi\t9\nverdict\tINFO\n");
    }
}

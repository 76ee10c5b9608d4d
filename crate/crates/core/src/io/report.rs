use std::fmt;

/// Ordered `key = value` document. Keys keep their insertion order so that
/// rendering is stable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Report {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn push_list<T: fmt::Display>(&mut self, key: impl Into<String>, items: impl IntoIterator<Item = T>) -> &mut Report {
        let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
        self.push(key, v.join(","))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Parses the rendered form back.
    pub fn parse(text: &str) -> Option<Report> {
        let mut r = Report::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line.split_once(" = ")?;
            r.entries.push((k.to_string(), v.to_string()));
        }
        Some(r)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

use crate::Format;

/// Ordered key/value lines, rendered as `key: value` text or `key=value`
/// records.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Lines of a `key=value` record, in order.
    pub fn from_record(record: &str) -> Self {
        let mut r = Report::new();
        for line in record.lines() {
            if let Some((k, v)) = line.split_once('=') {
                r.push(k, v);
            }
        }
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Structured => {
                for (k, v) in &self.lines {
                    out.push_str(&format!("{k}={v}\n"));
                }
            }
            Format::Text => {
                let width = self.lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 1;
                for (k, v) in &self.lines {
                    out.push_str(&format!("{:<width$} {v}\n", format!("{k}:")));
                }
            }
        }
        out
    }
}

pub fn list<T: ToString>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

//! CSV emission: comma separated, header row, LF endings, every number with
//! at least nine significant digits.

use std::io::Write;

/// Shortest round-trip decimal form, zero-padded to at least nine
/// significant digits.
pub fn format_number(x: f64) -> String {
    let mut s = format!("{x}");
    let digits: Vec<char> = s.chars().filter(char::is_ascii_digit).collect();
    let significant = match digits.iter().position(|&c| c != '0') {
        Some(first) => digits.len() - first,
        None => digits.len(),
    };
    if significant < 9 {
        if !s.contains('.') {
            s.push('.');
        }
        s.extend(std::iter::repeat_n('0', 9 - significant));
    }
    s
}

/// A header plus rows of numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_table<W: Write>(table: &Table, out: W) -> csv::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|&x| format_number(x)))?;
    }
    w.flush()?;
    Ok(())
}

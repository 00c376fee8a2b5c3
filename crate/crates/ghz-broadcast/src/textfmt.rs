//! A small structured-text document format: ordered `key = value` entries
//! where a value is a number, a double-quoted string, or a (possibly nested,
//! possibly multi-line) `[...]` array. `#` starts a comment. Numbers are
//! written with `f64`'s shortest round-trip representation, so a rendered
//! document parses back to bit-identical values.

use crate::error::{ParseError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Str(String),
    Arr(Vec<Value>),
}

impl Value {
    pub fn num(&self) -> Option<f64> {
        match self {
            Value::Num(x) => Some(*x),
            _ => None,
        }
    }

    pub fn str_(&self) -> Option<&str> {
        match self {
            Value::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn arr(&self) -> Option<&[Value]> {
        match self {
            Value::Arr(items) => Some(items),
            _ => None,
        }
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        match self {
            Value::Num(x) => out.push_str(&format_number(*x)),
            Value::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    if ch == '"' || ch == '\\' {
                        out.push('\\');
                    }
                    out.push(ch);
                }
                out.push('"');
            }
            Value::Arr(items) => {
                let nested = items.iter().any(|v| matches!(v, Value::Arr(_)));
                if nested {
                    out.push_str("[\n");
                    for (k, item) in items.iter().enumerate() {
                        out.push_str(&"  ".repeat(indent + 1));
                        item.render_into(out, indent + 1);
                        if k + 1 < items.len() {
                            out.push(',');
                        }
                        out.push('\n');
                    }
                    out.push_str(&"  ".repeat(indent));
                    out.push(']');
                } else {
                    out.push('[');
                    for (k, item) in items.iter().enumerate() {
                        if k > 0 {
                            out.push_str(", ");
                        }
                        item.render_into(out, indent);
                    }
                    out.push(']');
                }
            }
        }
    }
}

/// Shortest representation that parses back to the identical `f64`.
pub fn format_number(x: f64) -> String {
    format!("{x}")
}

/// Builds a `Value::Arr` of numbers.
pub fn num_array<I: IntoIterator<Item = f64>>(items: I) -> Value {
    Value::Arr(items.into_iter().map(Value::Num).collect())
}

/// An ordered key/value document.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    entries: Vec<(String, Value)>,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) {
        self.entries.push((key.into(), value));
    }

    pub fn push_num(&mut self, key: impl Into<String>, value: f64) {
        self.push(key, Value::Num(value));
    }

    pub fn push_str(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.push(key, Value::Str(value.into()));
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn require(&self, key: &str) -> Result<&Value, ParseError> {
        self.get(key).ok_or_else(|| ParseError::MissingKey(key.to_string()))
    }

    pub fn get_num(&self, key: &str) -> Result<f64, ParseError> {
        self.require(key)?.num().ok_or_else(|| bad_shape(key, "a number"))
    }

    pub fn get_str(&self, key: &str) -> Result<&str, ParseError> {
        self.require(key)?.str_().ok_or_else(|| bad_shape(key, "a string"))
    }

    pub fn get_arr(&self, key: &str) -> Result<&[Value], ParseError> {
        self.require(key)?.arr().ok_or_else(|| bad_shape(key, "an array"))
    }

    /// A flat numeric array of exactly `len` entries.
    pub fn get_nums(&self, key: &str, len: usize) -> Result<Vec<f64>, ParseError> {
        let items = self.get_arr(key)?;
        if items.len() != len {
            return Err(bad_shape(key, &format!("{len} numbers")));
        }
        items
            .iter()
            .map(|v| v.num().ok_or_else(|| bad_shape(key, "numbers")))
            .collect()
    }

    /// A matrix of numbers with the given number of rows and columns.
    pub fn get_matrix(&self, key: &str, rows: usize, cols: usize) -> Result<Vec<Vec<f64>>, ParseError> {
        let items = self.get_arr(key)?;
        if items.len() != rows {
            return Err(bad_shape(key, &format!("{rows} rows")));
        }
        items
            .iter()
            .map(|row| {
                let row = row.arr().ok_or_else(|| bad_shape(key, "rows of numbers"))?;
                if row.len() != cols {
                    return Err(bad_shape(key, &format!("rows of {cols} numbers")));
                }
                row.iter()
                    .map(|v| v.num().ok_or_else(|| bad_shape(key, "numbers")))
                    .collect()
            })
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            out.push_str(key);
            out.push_str(" = ");
            value.render_into(&mut out, 0);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(text)?;
        let mut doc = Document::new();
        let mut pos = 0;
        while pos < tokens.len() {
            let (key, line) = match &tokens[pos] {
                Token::Ident(name, line) => (name.clone(), *line),
                t => {
                    return Err(ParseError::Document {
                        line: t.line(),
                        message: format!("expected a key, found {}", t.describe()),
                    })
                }
            };
            pos += 1;
            match tokens.get(pos) {
                Some(Token::Equals(_)) => pos += 1,
                other => {
                    return Err(ParseError::Document {
                        line: other.map_or(line, Token::line),
                        message: format!("expected '=' after key {key:?}"),
                    })
                }
            }
            let (value, next) = parse_value(&tokens, pos)?;
            pos = next;
            doc.push(key, value);
        }
        Ok(doc)
    }
}

fn bad_shape(key: &str, expected: &str) -> ParseError {
    ParseError::BadShape {
        key: key.to_string(),
        expected: expected.to_string(),
    }
}

#[derive(Debug, Clone)]
enum Token {
    Ident(String, usize),
    Num(f64, usize),
    Str(String, usize),
    LBracket(usize),
    RBracket(usize),
    Comma(usize),
    Equals(usize),
}

impl Token {
    fn line(&self) -> usize {
        match self {
            Token::Ident(_, l)
            | Token::Num(_, l)
            | Token::Str(_, l)
            | Token::LBracket(l)
            | Token::RBracket(l)
            | Token::Comma(l)
            | Token::Equals(l) => *l,
        }
    }

    fn describe(&self) -> String {
        match self {
            Token::Ident(s, _) => format!("identifier {s:?}"),
            Token::Num(x, _) => format!("number {x}"),
            Token::Str(_, _) => "string".into(),
            Token::LBracket(_) => "'['".into(),
            Token::RBracket(_) => "']'".into(),
            Token::Comma(_) => "','".into(),
            Token::Equals(_) => "'='".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut line = 1;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b'\n' => {
                line += 1;
                pos += 1;
            }
            b' ' | b'\t' | b'\r' => pos += 1,
            b'#' => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            b'[' => {
                tokens.push(Token::LBracket(line));
                pos += 1;
            }
            b']' => {
                tokens.push(Token::RBracket(line));
                pos += 1;
            }
            b',' => {
                tokens.push(Token::Comma(line));
                pos += 1;
            }
            b'=' => {
                tokens.push(Token::Equals(line));
                pos += 1;
            }
            b'"' => {
                pos += 1;
                let mut s = String::new();
                loop {
                    match bytes.get(pos) {
                        None | Some(b'\n') => {
                            return Err(ParseError::Document {
                                line,
                                message: "unterminated string".into(),
                            })
                        }
                        Some(b'"') => {
                            pos += 1;
                            break;
                        }
                        Some(b'\\') => {
                            pos += 1;
                            match bytes.get(pos) {
                                Some(&c @ (b'"' | b'\\')) => {
                                    s.push(c as char);
                                    pos += 1;
                                }
                                _ => {
                                    return Err(ParseError::Document {
                                        line,
                                        message: "invalid string escape".into(),
                                    })
                                }
                            }
                        }
                        Some(&c) => {
                            s.push(c as char);
                            pos += 1;
                        }
                    }
                }
                tokens.push(Token::Str(s, line));
            }
            c if c == b'-' || c == b'+' || c.is_ascii_digit() || c == b'.' => {
                let start = pos;
                pos += 1;
                while pos < bytes.len() {
                    let c = bytes[pos];
                    let part_of_number = c.is_ascii_digit()
                        || c == b'.'
                        || c == b'e'
                        || c == b'E'
                        || ((c == b'+' || c == b'-') && matches!(bytes[pos - 1], b'e' | b'E'));
                    if !part_of_number {
                        break;
                    }
                    pos += 1;
                }
                let text = &text[start..pos];
                let value: f64 = text.parse().map_err(|_| ParseError::Document {
                    line,
                    message: format!("malformed number {text:?}"),
                })?;
                tokens.push(Token::Num(value, line));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                tokens.push(Token::Ident(text[start..pos].to_string(), line));
            }
            c => {
                return Err(ParseError::Document {
                    line,
                    message: format!("unexpected character {:?}", c as char),
                })
            }
        }
    }
    Ok(tokens)
}

fn parse_value(tokens: &[Token], pos: usize) -> Result<(Value, usize), ParseError> {
    match tokens.get(pos) {
        Some(Token::Num(x, _)) => Ok((Value::Num(*x), pos + 1)),
        Some(Token::Str(s, _)) => Ok((Value::Str(s.clone()), pos + 1)),
        Some(Token::LBracket(line)) => {
            let mut items = Vec::new();
            let mut pos = pos + 1;
            if let Some(Token::RBracket(_)) = tokens.get(pos) {
                return Ok((Value::Arr(items), pos + 1));
            }
            loop {
                let (item, next) = parse_value(tokens, pos)?;
                items.push(item);
                pos = next;
                match tokens.get(pos) {
                    Some(Token::Comma(_)) => pos += 1,
                    Some(Token::RBracket(_)) => return Ok((Value::Arr(items), pos + 1)),
                    other => {
                        return Err(ParseError::Document {
                            line: other.map_or(*line, Token::line),
                            message: "expected ',' or ']' in array".into(),
                        })
                    }
                }
            }
        }
        other => Err(ParseError::Document {
            line: other.map_or(0, Token::line),
            message: "expected a value".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_and_parses_back() {
        let mut doc = Document::new();
        doc.push_num("alpha", 0.25);
        doc.push_str("name", "a \"quoted\" label");
        doc.push(
            "matrix",
            Value::Arr(vec![num_array([1.0, 2.0]), num_array([3.0, -4.5e-3])]),
        );
        let text = doc.render();
        let parsed = Document::parse(&text).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn numbers_round_trip_exactly() {
        let values = [1.0 / 3.0, 7.0 / 54.0, 1e-300, -0.0, 123456.789, 2.0_f64.sqrt()];
        for &x in &values {
            let text = format!("v = {}\n", format_number(x));
            let doc = Document::parse(&text).unwrap();
            assert_eq!(doc.get_num("v").unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# heading\n\na = 1\n  # trailing\nb = [1, 2,\n  3]\n";
        let doc = Document::parse(text).unwrap();
        assert_eq!(doc.get_num("a").unwrap(), 1.0);
        assert_eq!(doc.get_nums("b", 3).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match Document::parse("a = [1, 2\nb = 3\n") {
            Err(ParseError::Document { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected document error, got {other:?}"),
        }
        assert!(Document::parse("a 1\n").is_err());
        assert!(Document::parse("a = [1,, 2]\n").is_err());
        assert!(Document::parse("= 3\n").is_err());
    }

    #[test]
    fn typed_getters_check_shapes() {
        let doc = Document::parse("v = [1, 2, 3]\nm = [[1, 2], [3, 4]]\n").unwrap();
        assert!(doc.get_nums("v", 4).is_err());
        assert!(doc.get_matrix("m", 2, 2).is_ok());
        assert!(doc.get_matrix("m", 2, 3).is_err());
        assert!(doc.get_num("v").is_err());
        assert!(matches!(doc.get_num("missing"), Err(ParseError::MissingKey(_))));
    }
}

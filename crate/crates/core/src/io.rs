//! Text and JSON forms of cubic matrices.
//!
//! Text: the order on the first non-blank line, then one block per vertical
//! layer separated by a blank line; block `k` row `i` column `j` is entry
//! `(i, j, k)`.
//!
//! ```text
//! 2
//! 4 -3
//! -1 5
//!
//! -2 4
//! -7 3
//! ```
//!
//! JSON: `{"order":2,"layers":[[[4,-3],[-1,5]],[[-2,4],[-7,3]]]}` with
//! `layers[k-1][i-1][j-1]`. Non-integers are strings `"p/q"`; JSON floats
//! are rejected.

use serde::Serializer;
use serde_json::Value;

use crate::core3d::{check_shape, CubicMatrix, Dim3, MAX_ORDER};
use crate::error::{Error, Location, Result, NOT_CUBIC, ORDER_TOO_HIGH};
use crate::scalar::Scalar;

/// Canonical text form; byte-identical for equal matrices.
pub fn serialize_text(a: &CubicMatrix) -> String {
    let mut out = format!("{}\n", a.order());
    for (k, block) in a.layers().iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for row in block {
            let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn not_cubic(line: usize, detail: String) -> Error {
    Error::parse(Location::Line { line }, format!("{NOT_CUBIC} ({detail})"))
}

pub fn parse_text(input: &str) -> Result<CubicMatrix> {
    let mut lines = input
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(n, text)| Line { number: n + 1, text })
        .skip_while(|l| l.text.trim().is_empty());

    let header = lines
        .next()
        .ok_or_else(|| Error::parse(Location::Line { line: 1 }, "empty input; expected the order"))?;
    let order: usize = header.text.trim().parse().map_err(|_| {
        Error::parse(
            Location::Line { line: header.number },
            format!("expected the order (1, 2 or 3), found {:?}", header.text.trim()),
        )
    })?;
    if order == 0 {
        return Err(Error::parse(Location::Line { line: header.number }, "order must be at least 1"));
    }
    if order > MAX_ORDER {
        return Err(Error::parse(
            Location::Line { line: header.number },
            format!("{ORDER_TOO_HIGH} (order {order})"),
        ));
    }

    // Group the remaining lines into blocks separated by blank lines.
    let mut blocks: Vec<Vec<Line>> = vec![Vec::new()];
    for line in lines {
        if line.text.trim().is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
        } else {
            blocks.last_mut().unwrap().push(line);
        }
    }
    if blocks.last().is_some_and(Vec::is_empty) {
        blocks.pop();
    }
    let last_line = header.number;

    let mut entries = Vec::with_capacity(order.pow(3));
    let mut rows_seen = None;
    let mut cols_seen = None;
    for (k, block) in blocks.iter().enumerate() {
        let block_no = k + 1;
        let first = block[0].number;
        match rows_seen {
            None => rows_seen = Some(block.len()),
            Some(r) if r != block.len() => {
                return Err(Error::parse(
                    Location::Line { line: first },
                    format!("block {block_no} has {} rows, block 1 has {r}", block.len()),
                ))
            }
            _ => {}
        }
        for (i, line) in block.iter().enumerate() {
            let mut cells = Vec::new();
            for (column, token) in (1..).zip(line.text.split_whitespace()) {
                let value = token.parse::<Scalar>().map_err(|e| {
                    Error::parse(Location::Column { line: line.number, column }, format!("{e}: {token:?}"))
                })?;
                cells.push(value);
            }
            match cols_seen {
                None => cols_seen = Some(cells.len()),
                Some(c) if c != cells.len() => {
                    return Err(Error::parse(
                        Location::Line { line: line.number },
                        format!("block {block_no} row {} has {} entries, expected {c}", i + 1, cells.len()),
                    ))
                }
                _ => {}
            }
            entries.extend(cells);
        }
    }

    let dim = Dim3 { m: rows_seen.unwrap_or(0), n: cols_seen.unwrap_or(0), p: blocks.len() };
    let location_line = blocks.last().and_then(|b| b.last()).map_or(last_line, |l| l.number);
    if !dim.is_cubic() {
        return Err(not_cubic(location_line, format!("found {dim}")));
    }
    if dim.m != order {
        return Err(Error::parse(
            Location::Line { line: header.number },
            format!("order line says {order} but the blocks form a {dim} matrix"),
        ));
    }
    // Entries were read block by block, row by row: canonical layout order.
    CubicMatrix::from_entries(order, entries)
}

/// Serde helper: integers as JSON numbers, everything else as `"p/q"`.
pub fn serialize_scalar<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_integer() {
        s.serialize_i64(x.numerator())
    } else {
        s.serialize_str(&x.to_string())
    }
}

pub fn scalar_to_json(x: Scalar) -> Value {
    if x.is_integer() {
        Value::from(x.numerator())
    } else {
        Value::from(x.to_string())
    }
}

/// Canonical compact JSON with keys `order` then `layers`.
pub fn serialize_json(a: &CubicMatrix) -> String {
    let layers: Vec<String> = a
        .layers()
        .iter()
        .map(|block| {
            let rows: Vec<String> = block
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(|&x| scalar_to_json(x).to_string()).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    format!("{{\"order\":{},\"layers\":[{}]}}", a.order(), layers.join(","))
}

fn at(path: &str) -> Location {
    Location::Json(path.to_string())
}

fn json_scalar(value: &Value, path: &str) -> Result<Scalar> {
    match value {
        Value::Number(n) => {
            if let Some(v) = n.as_i64() {
                Ok(Scalar::from_int(v))
            } else if n.is_f64() {
                Err(Error::parse(at(path), format!("float literal not permitted: {n}")))
            } else {
                Err(Error::parse(at(path), format!("integer out of 64-bit range: {n}")))
            }
        }
        Value::String(s) => s.parse::<Scalar>().map_err(|e| Error::parse(at(path), format!("{e}: {s:?}"))),
        other => Err(Error::parse(at(path), format!("expected a number or \"p/q\" string, found {other}"))),
    }
}

fn json_array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    value.as_array().ok_or_else(|| Error::parse(at(path), "expected an array"))
}

pub fn parse_json(input: &str) -> Result<CubicMatrix> {
    let doc: Value = serde_json::from_str(input).map_err(|e| {
        Error::parse(Location::Column { line: e.line(), column: e.column() }, format!("invalid JSON: {e}"))
    })?;
    let obj = doc.as_object().ok_or_else(|| Error::parse(at("$"), "expected a JSON object"))?;
    if let Some(key) = obj.keys().find(|k| *k != "order" && *k != "layers") {
        return Err(Error::parse(at("$"), format!("unexpected key {key:?}")));
    }
    let order_value = obj.get("order").ok_or_else(|| Error::parse(at("$"), "missing key \"order\""))?;
    if order_value.is_f64() {
        return Err(Error::parse(at("order"), "float literal not permitted"));
    }
    let order = order_value
        .as_u64()
        .ok_or_else(|| Error::parse(at("order"), "expected a positive integer"))? as usize;
    if order == 0 {
        return Err(Error::parse(at("order"), "order must be at least 1"));
    }
    if order > MAX_ORDER {
        return Err(Error::parse(at("order"), format!("{ORDER_TOO_HIGH} (order {order})")));
    }

    let layers = json_array(
        obj.get("layers").ok_or_else(|| Error::parse(at("$"), "missing key \"layers\""))?,
        "layers",
    )?;
    let mut entries = Vec::with_capacity(order.pow(3));
    let mut rows_seen = None;
    let mut cols_seen = None;
    for (k, block) in layers.iter().enumerate() {
        let bpath = format!("layers[{}]", k + 1);
        let rows = json_array(block, &bpath)?;
        if *rows_seen.get_or_insert(rows.len()) != rows.len() {
            return Err(Error::parse(
                at(&bpath),
                format!("{} rows, expected {}", rows.len(), rows_seen.unwrap()),
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            let rpath = format!("{bpath}[{}]", i + 1);
            let cells = json_array(row, &rpath)?;
            if *cols_seen.get_or_insert(cells.len()) != cells.len() {
                return Err(Error::parse(
                    at(&rpath),
                    format!("{} entries, expected {}", cells.len(), cols_seen.unwrap()),
                ));
            }
            for (j, cell) in cells.iter().enumerate() {
                entries.push(json_scalar(cell, &format!("{rpath}[{}]", j + 1))?);
            }
        }
    }
    let dim = Dim3 { m: rows_seen.unwrap_or(0), n: cols_seen.unwrap_or(0), p: layers.len() };
    if !dim.is_cubic() {
        return Err(Error::parse(at("layers"), format!("{NOT_CUBIC} (found {dim})")));
    }
    if dim.m != order {
        return Err(Error::parse(at("order"), format!("order is {order} but layers form a {dim} matrix")));
    }
    check_shape(dim)?;
    CubicMatrix::from_entries(order, entries)
}

/// Picks the parser from the first non-blank character.
pub fn parse_auto(input: &str) -> Result<CubicMatrix> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

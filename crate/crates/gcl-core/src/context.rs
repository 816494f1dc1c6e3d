//! Formal contexts: ingestion, derivation operators and the quotient into
//! discernible object classes.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Default cap on the attribute count. Truth tables are 2^|M| bits wide, so
/// the cap keeps them representable.
pub const DEFAULT_ATTR_CAP: usize = 20;

/// Prefix reserved for fictitious objects appended by referential completion.
pub const FICTITIOUS_PREFIX: &str = "_f";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContextFormat {
    Burmeister,
    Csv,
}

#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub max_attrs: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_attrs: DEFAULT_ATTR_CAP,
        }
    }
}

/// A formal context: objects, attributes and their incidence relation.
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct FormalContext {
    title: String,
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<Bits>,
    object_index: HashMap<String, usize>,
    attribute_index: HashMap<String, usize>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn valid_object_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == ',')
}

impl FormalContext {
    /// Builds a context from parts, validating names and row widths.
    /// Object names with the reserved `_f` prefix are accepted here; file
    /// ingestion via [`FormalContext::parse`] rejects them.
    pub fn from_parts(
        title: impl Into<String>,
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<Vec<bool>>,
        opts: &ParseOptions,
    ) -> Result<Self> {
        // Class signatures pack into word-sized truth-table indices, so the
        // configurable cap is itself bounded.
        let hard_cap = opts.max_attrs.min(63);
        if attributes.len() > hard_cap {
            return Err(Error::AttributeCapExceeded {
                count: attributes.len(),
                cap: hard_cap,
            });
        }
        let mut attribute_index = HashMap::new();
        for (j, m) in attributes.iter().enumerate() {
            if !is_identifier(m) {
                return Err(Error::InvalidAttributeName(m.clone()));
            }
            if attribute_index.insert(m.clone(), j).is_some() {
                return Err(Error::ContextParse {
                    line: 0,
                    msg: format!("duplicate attribute name `{m}`"),
                });
            }
        }
        let mut object_index = HashMap::new();
        for (i, g) in objects.iter().enumerate() {
            if !valid_object_name(g) {
                return Err(Error::InvalidObjectName(g.clone()));
            }
            if object_index.insert(g.clone(), i).is_some() {
                return Err(Error::ContextParse {
                    line: 0,
                    msg: format!("duplicate object name `{g}`"),
                });
            }
        }
        if rows.len() != objects.len() {
            return Err(Error::ContextParse {
                line: 0,
                msg: format!("{} rows for {} objects", rows.len(), objects.len()),
            });
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                if r.len() != attributes.len() {
                    return Err(Error::ContextParse {
                        line: 0,
                        msg: format!("row width {} != |M| = {}", r.len(), attributes.len()),
                    });
                }
                Ok(Bits::from_indices(
                    attributes.len(),
                    r.iter().enumerate().filter(|(_, &v)| v).map(|(j, _)| j),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FormalContext {
            title: title.into(),
            objects,
            attributes,
            rows,
            object_index,
            attribute_index,
        })
    }

    /// Parses a context file. Rejects object names using the reserved `_f`
    /// prefix so that referential completions stay distinguishable.
    pub fn parse(source: &str, format: ContextFormat, opts: &ParseOptions) -> Result<Self> {
        let ctx = match format {
            ContextFormat::Burmeister => Self::parse_burmeister(source, opts)?,
            ContextFormat::Csv => Self::parse_csv(source, opts)?,
        };
        if let Some(g) = ctx
            .objects
            .iter()
            .find(|g| g.starts_with(FICTITIOUS_PREFIX))
        {
            return Err(Error::ReservedObjectName(g.clone()));
        }
        Ok(ctx)
    }

    fn parse_burmeister(source: &str, opts: &ParseOptions) -> Result<Self> {
        // Blank lines are insignificant; keep original line numbers for errors.
        let lines: Vec<(usize, &str)> = source
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let err = |line: usize, msg: String| Error::ContextParse { line, msg };
        if lines.is_empty() || lines[0].1 != "B" {
            return Err(err(1, "expected header line `B`".into()));
        }
        // The title line is optional: with a title the counts sit on the two
        // following lines, without it they come right after `B`.
        let interpret = |title_present: bool| -> Option<(String, usize, usize, usize)> {
            let base = if title_present { 2 } else { 1 };
            let g: usize = lines.get(base)?.1.parse().ok()?;
            let m: usize = lines.get(base + 1)?.1.parse().ok()?;
            let names_at = base + 2;
            if lines.len() != names_at + g + m + g {
                return None;
            }
            let title = if title_present {
                lines[1].1.to_string()
            } else {
                String::new()
            };
            Some((title, g, m, names_at))
        };
        let (title, n_objs, n_attrs, names_at) = interpret(true)
            .or_else(|| interpret(false))
            .ok_or_else(|| {
                err(
                    lines.get(1).map_or(1, |l| l.0),
                    "malformed header: expected object/attribute counts".into(),
                )
            })?;
        let mut seen_names = HashMap::new();
        let mut read_names = |start: usize, count: usize, what: &str| -> Result<Vec<String>> {
            seen_names.clear();
            (0..count)
                .map(|i| {
                    let (line_no, name) = lines[start + i];
                    if seen_names.insert(name.to_string(), ()).is_some() {
                        return Err(err(line_no, format!("duplicate {what} name `{name}`")));
                    }
                    Ok(name.to_string())
                })
                .collect()
        };
        let objects = read_names(names_at, n_objs, "object")?;
        let attributes = read_names(names_at + n_objs, n_attrs, "attribute")?;
        let mut rows = Vec::with_capacity(n_objs);
        for i in 0..n_objs {
            let (line_no, text) = lines[names_at + n_objs + n_attrs + i];
            if text.chars().count() != n_attrs {
                return Err(err(
                    line_no,
                    format!(
                        "row has {} cells, expected {}",
                        text.chars().count(),
                        n_attrs
                    ),
                ));
            }
            let mut row = Vec::with_capacity(n_attrs);
            for c in text.chars() {
                match c {
                    'X' | 'x' => row.push(true),
                    '.' => row.push(false),
                    other => {
                        return Err(err(line_no, format!("unexpected cell character `{other}`")))
                    }
                }
            }
            rows.push(row);
        }
        Self::from_parts(title, objects, attributes, rows, opts).map_err(|e| match e {
            Error::ContextParse { msg, .. } => err(1, msg),
            other => other,
        })
    }

    fn parse_csv(source: &str, opts: &ParseOptions) -> Result<Self> {
        let mut lines = source
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.trim().is_empty());
        let (header_no, header) = lines.next().ok_or(Error::ContextParse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let cells: Vec<&str> = header.split(',').map(str::trim).collect();
        if cells.is_empty() {
            return Err(Error::ContextParse {
                line: header_no,
                msg: "empty header".into(),
            });
        }
        // First header cell labels the object column and is ignored.
        let attributes: Vec<String> = cells[1..].iter().map(|s| s.to_string()).collect();
        {
            let mut seen = HashMap::new();
            for m in &attributes {
                if seen.insert(m, ()).is_some() {
                    return Err(Error::ContextParse {
                        line: header_no,
                        msg: format!("duplicate attribute name `{m}`"),
                    });
                }
            }
        }
        let mut objects = Vec::new();
        let mut rows = Vec::new();
        for (line_no, line) in lines {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() != attributes.len() + 1 {
                return Err(Error::ContextParse {
                    line: line_no,
                    msg: format!(
                        "row has {} cells, expected {}",
                        cells.len(),
                        attributes.len() + 1
                    ),
                });
            }
            objects.push(cells[0].to_string());
            let mut row = Vec::with_capacity(attributes.len());
            for cell in &cells[1..] {
                match *cell {
                    "1" => row.push(true),
                    "0" => row.push(false),
                    other => {
                        return Err(Error::ContextParse {
                            line: line_no,
                            msg: format!("cell must be 0 or 1, got `{other}`"),
                        })
                    }
                }
            }
            rows.push(row);
        }
        Self::from_parts("", objects, attributes, rows, opts)
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attrs(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attribute_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    /// Incidence row of one object, |M| bits wide.
    pub fn row(&self, object: usize) -> &Bits {
        &self.rows[object]
    }

    /// The object's row read as a truth-table index: attribute j is bit j.
    pub fn row_minterm(&self, object: usize) -> usize {
        self.rows[object].iter_ones().map(|j| 1usize << j).sum()
    }

    pub fn incidence(&self, object: usize, attribute: usize) -> bool {
        self.rows[object].get(attribute)
    }

    /// g^R: the attributes an object carries.
    pub fn object_derive(&self, object: &str) -> Result<BTreeSet<String>> {
        let g = self.object_index(object)?;
        Ok(self.rows[g]
            .iter_ones()
            .map(|j| self.attributes[j].clone())
            .collect())
    }

    /// m^R: the objects carrying an attribute.
    pub fn attribute_derive(&self, attribute: &str) -> Result<BTreeSet<String>> {
        let m = self.attribute_index(attribute)?;
        Ok(self
            .attribute_extent(m)
            .iter_ones()
            .map(|i| self.objects[i].clone())
            .collect())
    }

    /// m^R as an object bit set.
    pub fn attribute_extent(&self, attribute: usize) -> Bits {
        Bits::from_indices(
            self.objects.len(),
            (0..self.objects.len()).filter(|&i| self.rows[i].get(attribute)),
        )
    }

    fn object_set(&self, objects: &[&str]) -> Result<Bits> {
        let mut set = Bits::zeros(self.objects.len());
        for name in objects {
            set.set(self.object_index(name)?, true);
        }
        Ok(set)
    }

    fn attr_names(&self, attrs: impl IntoIterator<Item = usize>) -> BTreeSet<String> {
        attrs
            .into_iter()
            .map(|j| self.attributes[j].clone())
            .collect()
    }

    /// X^I = {m | m^R ⊇ X}: attributes common to every object in X.
    pub fn derive_common(&self, objects: &[&str]) -> Result<BTreeSet<String>> {
        let x = self.object_set(objects)?;
        Ok(self.attr_names(
            (0..self.attributes.len()).filter(|&j| x.is_subset(&self.attribute_extent(j))),
        ))
    }

    /// X^□ = {m | m^R ⊆ X}: attributes appearing only inside X.
    pub fn derive_box(&self, objects: &[&str]) -> Result<BTreeSet<String>> {
        let x = self.object_set(objects)?;
        Ok(self.attr_names(
            (0..self.attributes.len()).filter(|&j| self.attribute_extent(j).is_subset(&x)),
        ))
    }

    /// A^◇ = ⋃_{m∈A} m^R.
    pub fn derive_diamond(&self, attrs: &[&str]) -> Result<BTreeSet<String>> {
        let mut out = Bits::zeros(self.objects.len());
        for name in attrs {
            out = out.or(&self.attribute_extent(self.attribute_index(name)?));
        }
        Ok(out.iter_ones().map(|i| self.objects[i].clone()).collect())
    }

    /// Partitions the objects into discernible classes, in first-appearance
    /// order of each row.
    pub fn quotient(&self) -> ContextQuotient {
        let mut seen: HashMap<Bits, usize> = HashMap::new();
        let mut classes: Vec<DiscernibleClass> = Vec::new();
        let mut class_of = Vec::with_capacity(self.objects.len());
        for (i, row) in self.rows.iter().enumerate() {
            let k = *seen.entry(row.clone()).or_insert_with(|| {
                classes.push(DiscernibleClass {
                    member_indices: Vec::new(),
                    members: Vec::new(),
                    signature: row.clone(),
                    minterm: row.iter_ones().map(|j| 1usize << j).sum(),
                });
                classes.len() - 1
            });
            classes[k].member_indices.push(i);
            classes[k].members.push(self.objects[i].clone());
            class_of.push(k);
        }
        ContextQuotient { classes, class_of }
    }

    /// Serializes in Burmeister form; the title line is omitted when empty.
    pub fn to_burmeister(&self) -> String {
        let mut out = String::from("B\n");
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
        }
        out.push_str(&format!(
            "{}\n{}\n",
            self.objects.len(),
            self.attributes.len()
        ));
        for g in &self.objects {
            out.push_str(g);
            out.push('\n');
        }
        for m in &self.attributes {
            out.push_str(m);
            out.push('\n');
        }
        for row in &self.rows {
            for j in 0..self.attributes.len() {
                out.push(if row.get(j) { 'X' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// One discernible class: objects sharing an identical incidence row.
#[derive(Debug, Clone)]
pub struct DiscernibleClass {
    member_indices: Vec<usize>,
    members: Vec<String>,
    signature: Bits,
    minterm: usize,
}

impl DiscernibleClass {
    pub fn members(&self) -> &[String] {
        &self.members
    }

    pub fn member_indices(&self) -> &[usize] {
        &self.member_indices
    }

    /// The shared incidence row, |M| bits.
    pub fn signature(&self) -> &Bits {
        &self.signature
    }

    /// The signature read as a truth-table index.
    pub fn minterm(&self) -> usize {
        self.minterm
    }
}

/// The quotient of a context: its discernible classes in first-appearance
/// order, with an object-to-class lookup.
#[derive(Debug, Clone)]
pub struct ContextQuotient {
    classes: Vec<DiscernibleClass>,
    class_of: Vec<usize>,
}

impl ContextQuotient {
    pub fn n_f(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[DiscernibleClass] {
        &self.classes
    }

    pub fn class_of(&self, object: usize) -> usize {
        self.class_of[object]
    }

    pub fn class_minterms(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.minterm).collect()
    }

    pub fn class_by_minterm(&self, minterm: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.minterm == minterm)
    }

    /// The mask of a set of object indices, if it is a union of whole classes.
    pub fn mask_of_object_indices(&self, objects: &[usize]) -> Result<ExtentMask> {
        let mut mask = ExtentMask::empty(self.n_f());
        for &i in objects {
            mask.set(self.class_of[i], true);
        }
        let covered: usize = mask
            .iter_classes()
            .map(|k| self.classes[k].member_indices.len())
            .sum();
        let distinct: std::collections::BTreeSet<usize> = objects.iter().copied().collect();
        if covered != distinct.len() {
            return Err(Error::NotAGeneralExtent(format!("{distinct:?}")));
        }
        Ok(mask)
    }
}

/// An n_F-bit mask selecting discernible classes; every value denotes a valid
/// general extent. Stored with class 1 at bit 0; displayed leftmost-first to
/// match the conventional string form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtentMask {
    bits: Bits,
}

impl ExtentMask {
    pub fn empty(n_f: usize) -> Self {
        ExtentMask {
            bits: Bits::zeros(n_f),
        }
    }

    pub fn full(n_f: usize) -> Self {
        ExtentMask {
            bits: Bits::ones(n_f),
        }
    }

    pub fn from_u64(value: u64, n_f: usize) -> Self {
        ExtentMask {
            bits: Bits::from_u64(value, n_f),
        }
    }

    pub fn from_classes(n_f: usize, classes: impl IntoIterator<Item = usize>) -> Self {
        ExtentMask {
            bits: Bits::from_indices(n_f, classes),
        }
    }

    /// Parses the display form: leftmost character is class 1.
    pub fn parse(text: &str, n_f: usize) -> Result<Self> {
        if text.chars().count() != n_f {
            return Err(Error::MaskWidth {
                got: text.chars().count(),
                expected: n_f,
            });
        }
        let mut mask = ExtentMask::empty(n_f);
        for (k, c) in text.chars().enumerate() {
            match c {
                '1' => mask.set(k, true),
                '0' => {}
                _ => return Err(Error::InvalidMask(text.to_string())),
            }
        }
        Ok(mask)
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn get(&self, class: usize) -> bool {
        self.bits.get(class)
    }

    pub fn set(&mut self, class: usize, value: bool) {
        self.bits.set(class, value)
    }

    pub fn count(&self) -> u64 {
        self.bits.count_ones()
    }

    pub fn union(&self, other: &ExtentMask) -> ExtentMask {
        ExtentMask {
            bits: self.bits.or(&other.bits),
        }
    }

    pub fn intersect(&self, other: &ExtentMask) -> ExtentMask {
        ExtentMask {
            bits: self.bits.and(&other.bits),
        }
    }

    pub fn complement(&self) -> ExtentMask {
        ExtentMask {
            bits: self.bits.not(),
        }
    }

    pub fn is_subset(&self, other: &ExtentMask) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn iter_classes(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn to_u64(&self) -> u64 {
        self.bits.to_u64()
    }
}

impl fmt::Display for ExtentMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.bits.len() {
            write!(f, "{}", if self.bits.get(k) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtentMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtentMask({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::six_objects;

    #[test]
    fn parse_burmeister_fixture() {
        let ctx = six_objects();
        assert_eq!(ctx.num_objects(), 6);
        assert_eq!(ctx.num_attrs(), 5);
        assert_eq!(
            ctx.object_derive("1").unwrap(),
            ["a", "c", "d", "e"].iter().map(|s| s.to_string()).collect()
        );
    }

    #[test]
    fn parse_burmeister_with_title() {
        let src = "B\nsome title\n1\n2\ng\nx\ny\nX.\n";
        let ctx =
            FormalContext::parse(src, ContextFormat::Burmeister, &ParseOptions::default()).unwrap();
        assert_eq!(ctx.title(), "some title");
        assert_eq!(ctx.num_objects(), 1);
        assert_eq!(ctx.num_attrs(), 2);
    }

    #[test]
    fn empty_objects_context_is_valid() {
        let src = "B\n0\n2\nx\ny\n";
        let ctx =
            FormalContext::parse(src, ContextFormat::Burmeister, &ParseOptions::default()).unwrap();
        assert_eq!(ctx.num_objects(), 0);
        assert_eq!(ctx.quotient().n_f(), 0);
    }

    #[test]
    fn csv_duplicate_attribute_rejected() {
        let src = "obj,a,a\ng1,1,0\n";
        let err = FormalContext::parse(src, ContextFormat::Csv, &ParseOptions::default());
        assert!(matches!(err, Err(Error::ContextParse { .. })));
    }

    #[test]
    fn csv_roundtrip_with_burmeister() {
        let csv = "objects,a,b\ng1,1,0\ng2,0,1\n";
        let ctx = FormalContext::parse(csv, ContextFormat::Csv, &ParseOptions::default()).unwrap();
        let again = FormalContext::parse(
            &ctx.to_burmeister(),
            ContextFormat::Burmeister,
            &ParseOptions::default(),
        )
        .unwrap();
        assert_eq!(again.objects(), ctx.objects());
        assert_eq!(again.row(0), ctx.row(0));
    }

    #[test]
    fn row_length_mismatch_reports_line() {
        let src = "B\n2\n2\ng1\ng2\nx\ny\nX.\nX\n";
        match FormalContext::parse(src, ContextFormat::Burmeister, &ParseOptions::default()) {
            Err(Error::ContextParse { line, .. }) => assert_eq!(line, 9),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn reserved_prefix_rejected_in_files() {
        let src = "B\n1\n1\n_f0\na\nX\n";
        assert!(matches!(
            FormalContext::parse(src, ContextFormat::Burmeister, &ParseOptions::default()),
            Err(Error::ReservedObjectName(_))
        ));
    }

    #[test]
    fn attribute_cap_enforced() {
        let attrs: Vec<String> = (0..21).map(|i| format!("m{i}")).collect();
        let err = FormalContext::from_parts("", vec![], attrs, vec![], &ParseOptions::default());
        assert!(matches!(err, Err(Error::AttributeCapExceeded { .. })));
    }

    #[test]
    fn quotient_of_fixture() {
        let ctx = six_objects();
        let q = ctx.quotient();
        assert_eq!(q.n_f(), 5);
        let members: Vec<Vec<String>> = q.classes().iter().map(|c| c.members().to_vec()).collect();
        assert_eq!(
            members,
            vec![
                vec!["1".to_string()],
                vec!["2".to_string()],
                vec!["3".to_string(), "4".to_string()],
                vec!["5".to_string()],
                vec!["6".to_string()],
            ]
        );
    }

    #[test]
    fn quotient_constant_rows() {
        let ctx = FormalContext::from_parts(
            "",
            vec!["g1".into(), "g2".into(), "g3".into()],
            vec!["a".into()],
            vec![vec![true], vec![true], vec![true]],
            &ParseOptions::default(),
        )
        .unwrap();
        let q = ctx.quotient();
        assert_eq!(q.n_f(), 1);
        assert_eq!(q.classes()[0].members().len(), 3);
    }

    #[test]
    fn derivations_on_fixture() {
        let ctx = six_objects();
        let names = |v: &[&str]| -> BTreeSet<String> { v.iter().map(|s| s.to_string()).collect() };
        assert_eq!(
            ctx.attribute_derive("a").unwrap(),
            names(&["1", "2", "5", "6"])
        );
        assert_eq!(ctx.attribute_derive("d").unwrap(), names(&["1"]));
        assert_eq!(ctx.object_derive("5").unwrap(), names(&["a"]));
        assert_eq!(ctx.derive_common(&["1", "2"]).unwrap(), names(&["a", "c"]));
        assert_eq!(ctx.derive_diamond(&["c", "d"]).unwrap(), names(&["1", "2"]));
        let all_objects: Vec<&str> = vec!["1", "2", "3", "4", "5", "6"];
        assert_eq!(
            ctx.derive_box(&all_objects).unwrap(),
            names(&["a", "b", "c", "d", "e"])
        );
        assert!(matches!(
            ctx.attribute_derive("zz"),
            Err(Error::UnknownAttribute(_))
        ));
    }

    #[test]
    fn attribute_extent_is_union_of_signature_classes() {
        let ctx = six_objects();
        let q = ctx.quotient();
        for j in 0..ctx.num_attrs() {
            let from_classes: BTreeSet<usize> = q
                .classes()
                .iter()
                .filter(|c| c.signature().get(j))
                .flat_map(|c| c.member_indices().iter().copied())
                .collect();
            let direct: BTreeSet<usize> = ctx.attribute_extent(j).iter_ones().collect();
            assert_eq!(from_classes, direct);
        }
    }

    #[test]
    fn mask_display_and_parse() {
        let mask = ExtentMask::from_classes(5, [0, 1, 3]);
        assert_eq!(mask.to_string(), "11010");
        assert_eq!(ExtentMask::parse("11010", 5).unwrap(), mask);
        assert!(ExtentMask::parse("110", 5).is_err());
    }

    #[test]
    fn mask_of_objects_requires_class_closure() {
        let ctx = six_objects();
        let q = ctx.quotient();
        // {3,4} is a whole class, {3} is not.
        assert!(q.mask_of_object_indices(&[2, 3]).is_ok());
        assert!(matches!(
            q.mask_of_object_indices(&[2]),
            Err(Error::NotAGeneralExtent(_))
        ));
    }
}

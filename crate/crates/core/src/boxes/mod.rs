//! The box problem and its construction from 3-SAT.
//!
//! A box problem instance is a rectangle `B` with corner `(1, 1)`, a set of
//! labeled axis-parallel boxes of unit height inside it, and a budget `k`.
//! It asks for at most `k` boxes whose x-extents cover the bottom edge of `B`
//! and whose y-extents cover its left edge. [`build_box_instance`] turns a
//! normalized CNF formula into an instance that is solvable exactly when the
//! formula is satisfiable.

mod cnf;
mod solve;

pub use cnf::{
    normalize_formula, parse_dimacs, sat_bruteforce, CnfError, CnfFormula, Literal, MAX_BRUTE_VARS,
};
pub use solve::{box_coverable, selection_covers, solve_box_bruteforce};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoxError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("invalid box instance: {0}")]
    Invalid(String),
    #[error("invalid box instance JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// The box `[x, x + w] × [y, y + 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledBox {
    pub label: Literal,
    pub w: f64,
    pub x: f64,
    pub y: f64,
}

impl LabeledBox {
    pub fn new(x: f64, y: f64, w: f64, label: Literal) -> Self {
        Self { label, w, x, y }
    }

    pub fn x_extent(&self) -> (f64, f64) {
        (self.x, self.x + self.w)
    }

    pub fn y_extent(&self) -> (f64, f64) {
        (self.y, self.y + 1.0)
    }
}

/// Field order is alphabetical so serialized JSON has sorted keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoxInstance {
    /// Upper-right corner `(x_max, y_max)` of `B`; the lower-left is `(1, 1)`.
    pub bound: [f64; 2],
    pub boxes: Vec<LabeledBox>,
    pub k: usize,
}

impl BoxInstance {
    pub fn from_json(text: &str) -> Result<Self, BoxError> {
        let inst: BoxInstance = serde_json::from_str(text)?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("box instances always serialize")
    }

    /// Checks finiteness, `w ≥ 1`, and that every box lies inside `B`.
    pub fn validate(&self) -> Result<(), BoxError> {
        let [xmax, ymax] = self.bound;
        if !(xmax.is_finite() && ymax.is_finite() && xmax > 1.0 && ymax > 1.0) {
            return Err(BoxError::Invalid(format!(
                "bound ({xmax}, {ymax}) must be finite and exceed (1, 1)"
            )));
        }
        for (idx, b) in self.boxes.iter().enumerate() {
            let bad = |what: &str| BoxError::Invalid(format!("box {idx}: {what}"));
            if !(b.x.is_finite() && b.y.is_finite() && b.w.is_finite()) {
                return Err(bad("non-finite coordinate"));
            }
            if b.w < 1.0 {
                return Err(bad("width below 1"));
            }
            if b.x < 1.0 || b.y < 1.0 || b.x + b.w > xmax || b.y + 1.0 > ymax {
                return Err(bad("outside the bounding box"));
            }
            if b.label.0 == 0 {
                return Err(bad("label 0 is not a literal"));
            }
        }
        Ok(())
    }
}

/// Occurrence counts of a normalized formula.
struct Occurrences {
    /// `pos[i]`: indices of the clauses containing `v_{i+1}`, in clause order.
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
}

impl Occurrences {
    fn of(f: &CnfFormula) -> Self {
        let n = f.num_vars();
        let mut pos = vec![Vec::new(); n];
        let mut neg = vec![Vec::new(); n];
        for (h, clause) in f.clauses().iter().enumerate() {
            for lit in clause {
                let list = if lit.is_positive() { &mut pos } else { &mut neg };
                list[lit.var() - 1].push(h);
            }
        }
        Self { pos, neg }
    }
}

fn prefix_sums(lists: &[Vec<usize>]) -> Vec<usize> {
    let mut out = vec![0];
    for l in lists {
        out.push(out.last().unwrap() + l.len());
    }
    out
}

/// Places the variable, split and clause gadgets for a normalized formula.
///
/// With `a⁺ᵢ`/`a⁻ᵢ` the number of positive/negative occurrences of `vᵢ` and
/// `s⁺ᵢ`/`s⁻ᵢ` their prefix sums, the boxes are emitted in this order:
///
/// * per variable: `(i, i, 1, ¬vᵢ)` and `(i, i+n+s⁺ₙ, 1, vᵢ)`;
/// * per variable, positive split: `(1+n+s⁺ᵢ₋₁, i, a⁺ᵢ, vᵢ)` followed by
///   `(n+s⁺ᵢ₋₁+j, n+s⁺ᵢ₋₁+j, 1, ¬vᵢ)` for `j = 1..a⁺ᵢ`;
/// * per variable, negative split: `(1+n+s⁺ₙ+s⁻ᵢ₋₁, n+s⁺ₙ+i, a⁻ᵢ, ¬vᵢ)`
///   followed by `(n+s⁺ₙ+s⁻ᵢ₋₁+j, 2n+s⁺ₙ+s⁻ᵢ₋₁+j, 1, vᵢ)`;
/// * per clause `c_h`, at column `I(c_h) = n+s⁺ₙ+s⁻ₙ+h`, one box per literal:
///   `(I, n+s⁺ᵢ₋₁+j, 1, vᵢ)` if `c_h` is the j-th positive occurrence of `vᵢ`,
///   `(I, 2n+s⁺ₙ+s⁻ᵢ₋₁+j, 1, ¬vᵢ)` if it is the j-th negative one.
///
/// Occurrences of a variable are numbered in clause order.
pub fn build_box_instance(f: &CnfFormula) -> Result<BoxInstance, BoxError> {
    if let Some(var) = (1..=f.num_vars()).find(|&v| {
        let lits = f.clauses().iter().flatten();
        !(lits.clone().any(|&l| l == Literal::pos(v)) && lits.clone().any(|&l| l == Literal::neg(v)))
    }) {
        return Err(CnfError::NotNormalized(var).into());
    }
    if !f.is_normalized() {
        return Err(BoxError::Invalid(
            "formula has an empty, oversized or duplicated clause".into(),
        ));
    }
    let n = f.num_vars();
    let m = f.clauses().len();
    let occ = Occurrences::of(f);
    let sp = prefix_sums(&occ.pos);
    let sn = prefix_sums(&occ.neg);
    let (spn, snn) = (sp[n], sn[n]);
    let c = |v: usize| v as f64;

    let mut boxes = Vec::new();
    for i in 1..=n {
        boxes.push(LabeledBox::new(c(i), c(i), 1.0, Literal::neg(i)));
        boxes.push(LabeledBox::new(c(i), c(i + n + spn), 1.0, Literal::pos(i)));
    }
    for i in 1..=n {
        let a = occ.pos[i - 1].len();
        boxes.push(LabeledBox::new(c(1 + n + sp[i - 1]), c(i), c(a), Literal::pos(i)));
        for j in 1..=a {
            let at = c(n + sp[i - 1] + j);
            boxes.push(LabeledBox::new(at, at, 1.0, Literal::neg(i)));
        }
    }
    for i in 1..=n {
        let a = occ.neg[i - 1].len();
        boxes.push(LabeledBox::new(
            c(1 + n + spn + sn[i - 1]),
            c(n + spn + i),
            c(a),
            Literal::neg(i),
        ));
        for j in 1..=a {
            boxes.push(LabeledBox::new(
                c(n + spn + sn[i - 1] + j),
                c(2 * n + spn + sn[i - 1] + j),
                1.0,
                Literal::pos(i),
            ));
        }
    }
    for (h, clause) in f.clauses().iter().enumerate() {
        let anchor = c(n + spn + snn + h + 1);
        for lit in clause {
            let i = lit.var();
            let y = if lit.is_positive() {
                let j = occurrence_rank(&occ.pos[i - 1], h);
                n + sp[i - 1] + j
            } else {
                let j = occurrence_rank(&occ.neg[i - 1], h);
                2 * n + spn + sn[i - 1] + j
            };
            boxes.push(LabeledBox::new(anchor, c(y), 1.0, *lit));
        }
    }

    Ok(BoxInstance {
        bound: [c(1 + n + spn + snn + m), c(1 + 2 * n + spn + snn)],
        boxes,
        k: 2 * n + spn + snn,
    })
}

/// 1-based position of clause `h` among a variable's occurrences.
fn occurrence_rank(occurrences: &[usize], h: usize) -> usize {
    1 + occurrences
        .iter()
        .position(|&x| x == h)
        .expect("clause is listed among the occurrences of its literals")
}

/// Indices of the boxes whose label is true under `assignment` (indexed by `var - 1`).
pub fn assignment_selection(instance: &BoxInstance, assignment: &[bool]) -> Vec<usize> {
    instance
        .boxes
        .iter()
        .enumerate()
        .filter(|(_, b)| b.label.eval(assignment))
        .map(|(idx, _)| idx)
        .collect()
}

/// Whether every unit row `[y, y+1]` of the left edge of `B` is covered by
/// exactly two boxes, and their labels are complementary.
pub fn unit_rows_are_paired(instance: &BoxInstance) -> bool {
    let ymax = instance.bound[1];
    let rows = (ymax - 1.0).round() as usize;
    (0..rows).all(|r| {
        let y = 1.0 + r as f64;
        let covering: Vec<&LabeledBox> = instance
            .boxes
            .iter()
            .filter(|b| b.y <= y && y + 1.0 <= b.y + 1.0)
            .collect();
        covering.len() == 2 && covering[0].label == covering[1].label.negated()
    })
}

/// Expected box count `4n + 2(m₁ + 2m₂ + 3m₃)` and budget `2n + m₁ + 2m₂ + 3m₃`,
/// where `m_i` is the number of clauses with `i` literals.
pub fn closed_form_counts(f: &CnfFormula) -> (usize, usize) {
    let mut m = [0usize; 4];
    for clause in f.clauses() {
        m[clause.len().min(3)] += 1;
    }
    let weighted = m[1] + 2 * m[2] + 3 * m[3];
    (4 * f.num_vars() + 2 * weighted, 2 * f.num_vars() + weighted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(l: i32) -> Literal {
        Literal(l)
    }

    fn b(x: f64, y: f64, w: f64, l: i32) -> LabeledBox {
        LabeledBox::new(x, y, w, lit(l))
    }

    #[test]
    fn tautology_gadget_boxes() {
        let f = CnfFormula::from_ints(1, &[&[1, -1]]).unwrap();
        let inst = build_box_instance(&f).unwrap();
        assert_eq!(
            inst.boxes,
            vec![
                b(1.0, 1.0, 1.0, -1),
                b(1.0, 3.0, 1.0, 1),
                b(2.0, 1.0, 1.0, 1),
                b(2.0, 2.0, 1.0, -1),
                b(3.0, 3.0, 1.0, -1),
                b(3.0, 4.0, 1.0, 1),
                b(4.0, 2.0, 1.0, 1),
                b(4.0, 4.0, 1.0, -1),
            ]
        );
        assert_eq!(inst.k, 4);
        assert_eq!(inst.bound, [5.0, 5.0]);
        assert!(unit_rows_are_paired(&inst));
    }

    #[test]
    fn contradiction_instance() {
        let f = normalize_formula(&CnfFormula::from_ints(1, &[&[1], &[-1]]).unwrap()).unwrap();
        let inst = build_box_instance(&f).unwrap();
        assert_eq!(inst.boxes.len(), 8);
        assert_eq!(inst.k, 4);
        assert_eq!(closed_form_counts(&f), (8, 4));
        assert!(unit_rows_are_paired(&inst));
    }

    #[test]
    fn wide_split_boxes() {
        // x1 occurs positively in both clauses, so its positive split box has width 2.
        let f = CnfFormula::from_ints(2, &[&[1, 2], &[1, -2], &[-1, -2]]).unwrap();
        assert!(f.is_normalized());
        let inst = build_box_instance(&f).unwrap();
        assert!(inst.boxes.contains(&b(3.0, 1.0, 2.0, 1)));
        let (count, k) = closed_form_counts(&f);
        assert_eq!((inst.boxes.len(), inst.k), (count, k));
        assert_eq!(k, 10);
        assert!(unit_rows_are_paired(&inst));
        inst.validate().unwrap();
    }

    #[test]
    fn rejects_unnormalized() {
        let f = CnfFormula::from_ints(2, &[&[1, 2]]).unwrap();
        assert!(matches!(
            build_box_instance(&f),
            Err(BoxError::Cnf(CnfError::NotNormalized(1)))
        ));
    }

    #[test]
    fn json_round_trip_has_sorted_keys() {
        let f = CnfFormula::from_ints(1, &[&[1, -1]]).unwrap();
        let inst = build_box_instance(&f).unwrap();
        let text = inst.to_json();
        let bound = text.find("\"bound\"").unwrap();
        let boxes = text.find("\"boxes\"").unwrap();
        let k = text.find("\"k\"").unwrap();
        assert!(bound < boxes && boxes < k);
        assert_eq!(BoxInstance::from_json(&text).unwrap(), inst);
    }

    #[test]
    fn json_validation() {
        let bad = r#"{"bound":[3,3],"boxes":[{"x":1,"y":1,"w":0.5,"label":1}],"k":1}"#;
        assert!(matches!(BoxInstance::from_json(bad), Err(BoxError::Invalid(_))));
        let outside = r#"{"bound":[3,3],"boxes":[{"x":2.5,"y":1,"w":1,"label":1}],"k":1}"#;
        assert!(BoxInstance::from_json(outside).is_err());
        assert!(matches!(BoxInstance::from_json("{"), Err(BoxError::Json(_))));
    }

    #[test]
    fn assignment_selection_has_size_k_and_covers() {
        let f = CnfFormula::from_ints(3, &[&[1, 2, -3], &[-1, 3], &[-2, 3], &[2, -1, -3]]).unwrap();
        let f = normalize_formula(&f).unwrap();
        let inst = build_box_instance(&f).unwrap();
        for mask in 0..8u32 {
            let a = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
            let sel = assignment_selection(&inst, &a);
            assert_eq!(sel.len(), inst.k);
            assert_eq!(selection_covers(&inst, &sel), f.eval(&a), "assignment {a:?}");
        }
    }
}

//! Board state: one optional label per slot plus the used-label mask.
//! Slots are the labeled elements in a fixed order (vertices, or edges,
//! or vertices followed by edges), assigned by the rule set.

/// Immutable board state. Apply moves through a rule set, which returns
/// a fresh value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position {
    labels: Box<[Option<i32>]>,
    /// One flag per domain label under NoRepeats; empty otherwise.
    used: Box<[bool]>,
    move_count: u32,
}

impl Position {
    pub(crate) fn new(slots: usize, tracked_labels: usize) -> Position {
        Position {
            labels: vec![None; slots].into_boxed_slice(),
            used: vec![false; tracked_labels].into_boxed_slice(),
            move_count: 0,
        }
    }

    pub fn label(&self, slot: usize) -> Option<i32> {
        self.labels[slot]
    }

    pub fn labels(&self) -> &[Option<i32>] {
        &self.labels
    }

    pub fn move_count(&self) -> u32 {
        self.move_count
    }

    pub fn slot_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_complete(&self) -> bool {
        self.move_count as usize == self.labels.len()
    }

    /// Used-label lookup; `offset` is the label minus the domain low end.
    pub(crate) fn used_offset(&self, offset: usize) -> bool {
        self.used[offset]
    }

    pub(crate) fn tracks_used(&self) -> bool {
        !self.used.is_empty()
    }

    pub(crate) fn with_label(&self, slot: usize, label: i32, offset: Option<usize>) -> Position {
        let mut labels = self.labels.clone();
        labels[slot] = Some(label);
        let mut used = self.used.clone();
        if let Some(off) = offset {
            used[off] = true;
        }
        Position {
            labels,
            used,
            move_count: self.move_count + 1,
        }
    }
}

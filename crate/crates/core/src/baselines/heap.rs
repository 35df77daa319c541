//! Addressable binary min-heap keyed by vertex id.

const ABSENT: usize = usize::MAX;

/// Binary min-heap over vertices `0..n` with `O(log n)` push, pop and
/// decrease-key. `position[v]` tracks where `v` sits in the heap array.
#[derive(Debug, Clone)]
pub struct IndexedMinHeap {
    heap: Vec<usize>,
    keys: Vec<i64>,
    position: Vec<usize>,
}

impl IndexedMinHeap {
    pub fn new(n: usize) -> Self {
        IndexedMinHeap { heap: Vec::with_capacity(n), keys: vec![0; n], position: vec![ABSENT; n] }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position[v] != ABSENT
    }

    pub fn key(&self, v: usize) -> Option<i64> {
        self.contains(v).then(|| self.keys[v])
    }

    /// Inserts `v`, which must not be in the heap.
    pub fn push(&mut self, v: usize, key: i64) {
        debug_assert!(!self.contains(v), "vertex {v} already queued");
        self.keys[v] = key;
        self.position[v] = self.heap.len();
        self.heap.push(v);
        self.sift_up(self.heap.len() - 1);
    }

    /// Lowers the key of queued vertex `v`.
    pub fn decrease_key(&mut self, v: usize, key: i64) {
        let pos = self.position[v];
        debug_assert!(pos != ABSENT && key <= self.keys[v]);
        self.keys[v] = key;
        self.sift_up(pos);
    }

    pub fn pop_min(&mut self) -> Option<(usize, i64)> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty");
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.position[last] = 0;
            self.sift_down(0);
        }
        self.position[top] = ABSENT;
        Some((top, self.keys[top]))
    }

    pub fn clear(&mut self) {
        for &v in &self.heap {
            self.position[v] = ABSENT;
        }
        self.heap.clear();
    }

    fn sift_up(&mut self, mut pos: usize) {
        let v = self.heap[pos];
        let key = self.keys[v];
        while pos > 0 {
            let parent = (pos - 1) / 2;
            let p = self.heap[parent];
            if self.keys[p] <= key {
                break;
            }
            self.heap[pos] = p;
            self.position[p] = pos;
            pos = parent;
        }
        self.heap[pos] = v;
        self.position[v] = pos;
    }

    fn sift_down(&mut self, mut pos: usize) {
        let len = self.heap.len();
        let v = self.heap[pos];
        let key = self.keys[v];
        loop {
            let left = 2 * pos + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let child =
                if right < len && self.keys[self.heap[right]] < self.keys[self.heap[left]] { right } else { left };
            let c = self.heap[child];
            if self.keys[c] >= key {
                break;
            }
            self.heap[pos] = c;
            self.position[c] = pos;
            pos = child;
        }
        self.heap[pos] = v;
        self.position[v] = pos;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decrease_key_reorders() {
        let mut h = IndexedMinHeap::new(4);
        h.push(0, 10);
        h.push(1, 5);
        h.push(2, 7);
        h.decrease_key(0, 1);
        assert_eq!(h.pop_min(), Some((0, 1)));
        assert_eq!(h.pop_min(), Some((1, 5)));
        assert!(!h.contains(1));
        assert_eq!(h.key(2), Some(7));
        assert_eq!(h.pop_min(), Some((2, 7)));
        assert_eq!(h.pop_min(), None);
    }

    #[test]
    fn clear_resets_positions() {
        let mut h = IndexedMinHeap::new(3);
        h.push(2, 1);
        h.push(0, 4);
        h.clear();
        assert!(h.is_empty() && !h.contains(0) && !h.contains(2));
        h.push(0, 3);
        assert_eq!(h.len(), 1);
    }

    proptest! {
        #[test]
        fn pops_in_sorted_order(keys in proptest::collection::vec(-100i64..100, 1..40), lowered in proptest::collection::vec((0usize..40, 0i64..50), 0..20)) {
            let n = keys.len();
            let mut h = IndexedMinHeap::new(n);
            let mut current = keys.clone();
            for (v, &k) in keys.iter().enumerate() {
                h.push(v, k);
            }
            for (v, delta) in lowered {
                let v = v % n;
                current[v] -= delta;
                h.decrease_key(v, current[v]);
            }
            let mut popped = Vec::new();
            while let Some((v, k)) = h.pop_min() {
                prop_assert_eq!(k, current[v]);
                popped.push(k);
            }
            let mut sorted = current.clone();
            sorted.sort_unstable();
            prop_assert_eq!(popped, sorted);
        }
    }
}

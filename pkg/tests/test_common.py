import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import unittest

from common.bitsets import format_set, full_mask, is_proper_subset, mask_of, members, popcount
from common.exceptions import EnumerationBoundError
from common.guards import ensure_within
from common.partition import partitioned_sweep, rank_ranges


class TestBitsets(unittest.TestCase):
    def test_masks(self):
        mask = mask_of([1, 3, 4])
        self.assertEqual(mask, 0b1101)
        self.assertEqual(members(mask), [1, 3, 4])
        self.assertEqual(popcount(mask), 3)
        self.assertEqual(full_mask(3), 0b111)
        self.assertTrue(is_proper_subset(mask_of([1]), mask))
        self.assertFalse(is_proper_subset(mask, mask))

    def test_format_set(self):
        self.assertEqual(format_set(0, 3), "{}")
        self.assertEqual(format_set(mask_of([2, 3]), 3), "{2,3}")
        self.assertEqual(format_set(full_mask(3), 3), "{*}")


class TestPartition(unittest.TestCase):
    def test_rank_ranges(self):
        self.assertEqual(rank_ranges(10, 3), [(0, 4), (4, 7), (7, 10)])
        self.assertEqual(rank_ranges(2, 5), [(0, 1), (1, 2)])
        self.assertEqual(rank_ranges(0, 4), [(0, 0)])

    def test_sweep_is_split_invariant(self):
        def scan(start, stop):
            return list(range(start, stop))

        expected = list(range(50))
        for workers in (1, 2, 7):
            self.assertEqual(partitioned_sweep(50, scan, lambda a, b: a + b, workers=workers), expected)


class TestGuards(unittest.TestCase):
    def test_ensure_within(self):
        ensure_within("perms", 24, 24)
        with self.assertRaises(EnumerationBoundError) as ctx:
            ensure_within("perms", 25, 24)
        self.assertEqual((ctx.exception.value, ctx.exception.limit), (25, 24))


if __name__ == '__main__':
    unittest.main()

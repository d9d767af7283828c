# Tests for lipset

# Tests for superspencer

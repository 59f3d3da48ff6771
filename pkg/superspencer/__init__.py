# superspencer: Spencer cohomology of Lie superalgebra G-structures

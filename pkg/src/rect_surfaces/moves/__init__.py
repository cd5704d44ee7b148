from .records import (MoveRecord, MoveSequence, MoveError, fixed_on,
                      parse_record, parse_sequence, compose_correspondence,
                      WRINKLE_CREATE, WRINKLE_REDUCE, HALF_WRINKLE_CREATE,
                      HALF_WRINKLE_REDUCE, STABILIZE, DESTABILIZE, EXCHANGE,
                      FLYPE, BUBBLE_CREATE, BUBBLE_REDUCE, KINDS,
                      VERTICAL, HORIZONTAL, IDENTITY, THETA_REFLECTION)
from .apply import apply_record, apply_sequence
from .enumerate import enumerate_moves
from .wrinkle import (apply_wrinkle_create, apply_wrinkle_reduce,
                      apply_half_wrinkle_create, apply_half_wrinkle_reduce,
                      apply_stabilize, apply_destabilize)
from .exchange import apply_exchange
from .flype import apply_flype, PatternNotFound
from .bubble import apply_bubble_create, apply_bubble_reduce, decompose_bubble

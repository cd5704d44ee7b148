from .chords import (ChordDiagram, Event, MovieError, cdiag, chord,
                     is_admissible, strict_event, chords_cross)
from .regions import (Region, regions, region_tree, tree_path, tree_tour,
                      region_containing_points)
from .movie import MovieDiagram, movie_of, movies_equal, region_function
from .reconstruct import reconstruct, ReconstructPolicy, UnsatisfiableEvent
from .files import movie_to_text, movie_from_text

"""Binary code-assignment matrices.

Band constructions, assignment-property verification, fast code assignment
and frame-by-frame pool simulation. Everything lives in the compiled
extension; this package only re-exports it.
"""

from wca._core import *  # noqa: F401,F403

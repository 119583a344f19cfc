# The existence of this file makes this subfolder a "package"

# The following imports make it so that the client only has to say
# "from clusterbench import X" where X is the ultimate class or function name

# flake8: noqa
__version__ = "0.1.0"

from .utils.exceptions import *
from .utils.enums import *
from .utils.numeric import *
from .utils.strings import *
from .data.dataset import *
from .data.manifest import *
from .clustering.objective import *
from .clustering.kmeans import *
from .clustering.levy import *
from .clustering.fpa import *
from .clustering.fpakm import *
from .clustering.evaluation import *
from .bench.config import *
from .bench.experiment import *
from .bench.report import *

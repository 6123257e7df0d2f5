# -*- coding: utf-8 -*-

"""
Sequential Monte Carlo toolkit for online parameter learning and maximum
likelihood in state-space models.
"""

__author__      = "Lars van Vianen"
__copyright__   = "Copyright (c) 2024 Scape Agency"
__credits__     = ["Lars van Vianen",]
__license__     = "MIT"
__version__     = "0.1.0"
__maintainer__  = "Lars van Vianen"
__email__       = "lars@scape.agency"
__status__      = "Alpha"

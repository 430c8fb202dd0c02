#
#    The active-learning stopping toolkit (alstop)
#    Copyright (C) 2026 The alstop developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Affero General Public License as
#    published by the Free Software Foundation, either version 3 of the
#    License, or (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Affero General Public License for more details.
#
#    You should have received a copy of the GNU Affero General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.

import alstop.core.basic
import alstop.core.console
import alstop.core.crypto
import alstop.core.errors
import alstop.core.alstopobject
import alstop.core.ioadapters
import alstop.core.tabular

from alstop.core.basic import *
from alstop.core.console import *
from alstop.core.crypto import *
from alstop.core.errors import *
from alstop.core.alstopobject import *
from alstop.core.ioadapters import *
from alstop.core.tabular import *

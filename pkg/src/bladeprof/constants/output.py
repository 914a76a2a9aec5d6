"""Output format constants.

CSV headers and the leading format comment, plus SVG rendering defaults.
"""

CSV_MAGIC_LINE = '# bladeprof v1'
CSV_SEPARATOR = ','
CSV_INFINITY = 'inf'

# Headers
TRAJECTORY_HEADER = ['t', 'Y', 'Ydot', 'X', 'Xdot', 'v']
PROFILE_HEADER = ['Y', 'F', 'F_Y', 'F_YY']
GEOMETRY_HEADER = ['Y', 'F', 'F_Y', 'F_YY', 'r_c', 'alpha', 's']

# SVG
SVG_NAMESPACE = 'http://www.w3.org/2000/svg'
SVG_XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'
SVG_COORD_FORMAT = '.6f'
SVG_MARGIN_RATIO = 0.05
SVG_STROKE_WIDTH_RATIO = 0.005
SVG_AXIS_STROKE = 'gray'

from .render import FigureSpec, SchemaError, render, render_fig3, render_fig4

__version__ = "0.1.0"

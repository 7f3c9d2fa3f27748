#!/usr/bin/env python3
"""Tool registry for managing command-line tools."""

from typing import Any, Dict, List

from config.logging_setup import get_logger
from models.errors import CommutantError
from models.reports import ToolResult
from tools.base_tool import BaseTool

logger = get_logger(__name__)


class ToolRegistry:
    """Registry for managing the subcommand tools."""

    def __init__(self):
        self.tools: Dict[str, BaseTool] = {}

    def register_tool(self, tool: BaseTool):
        """Register a tool."""
        self.tools[tool.name] = tool
        logger.debug(f"Registered tool: {tool.name}")

    def register_category_tools(self):
        """Register category data tools."""
        from tools.category_tools import ValidateTool
        self.register_tool(ValidateTool())

    def register_tube_tools(self):
        """Register tube algebra tools."""
        from tools.tube_tools import CenterTool, TubeTool
        self.register_tool(TubeTool())
        self.register_tool(CenterTool())

    def register_commutant_tools(self):
        """Register block decomposition, half-braiding and solver tools."""
        from tools.commutant_tools import CommutantTool, FusionTool, OracleTool
        self.register_tool(CommutantTool())
        self.register_tool(FusionTool())
        self.register_tool(OracleTool())

    def register_alpha_tools(self):
        """Register α-induction counting tools."""
        from tools.alpha_tools import AlphaCheckTool
        self.register_tool(AlphaCheckTool())

    def register_all(self) -> "ToolRegistry":
        self.register_category_tools()
        self.register_tube_tools()
        self.register_commutant_tools()
        self.register_alpha_tools()
        return self

    def get_tool_names(self) -> List[str]:
        """Get list of all registered tool names."""
        return list(self.tools.keys())

    def execute_tool(self, name: str, arguments: Dict[str, Any]) -> ToolResult:
        """Execute a tool by name; failures become error reports with the matching exit code."""
        if name not in self.tools:
            return ToolResult({
                "command": name,
                "status": "error",
                "error": {
                    "type": "UnknownCommand",
                    "message": f"Tool '{name}' not found. Available tools: {', '.join(self.tools.keys())}",
                },
            }, 2)

        tool = self.tools[name]
        try:
            result = tool.execute(arguments)
        except CommutantError as e:
            logger.error(f"{name} failed: {type(e).__name__}: {e}")
            return tool.format_error(e)
        except Exception as e:
            logger.exception(f"Unexpected error executing tool {name}: {e}")
            return tool.format_error(e)
        logger.info(f"{name} finished with status {result.report.get('status')}")
        return result

    def get_tool_stats(self) -> Dict[str, Any]:
        """Get statistics about registered tools."""
        tool_categories = {
            'category': [],
            'tube': [],
            'commutant': [],
            'alpha': [],
        }

        for name in self.tools.keys():
            if name == 'validate':
                tool_categories['category'].append(name)
            elif name in ('tube', 'center'):
                tool_categories['tube'].append(name)
            elif name.startswith('alpha'):
                tool_categories['alpha'].append(name)
            else:
                tool_categories['commutant'].append(name)

        return {
            'total_tools': len(self.tools),
            'categories': {
                category: {
                    'count': len(tools),
                    'tools': tools
                }
                for category, tools in tool_categories.items()
                if tools
            }
        }

/** Category colors.  Override at build time by assigning
 * ``globalThis.__viewerTheme`` before the app module loads. */
export interface Theme {
  categories: Record<string, string>;
  fallback: string;
}

export const defaultTheme: Theme = {
  categories: {
    "object:add": "#1a7f37",
    "object:remove": "#cf222e",
    "array:add": "#1a7f37",
    "array:remove": "#cf222e",
    "value:change": "#9a6700",
  },
  fallback: "#0969da",
};

export function resolveTheme(): Theme {
  const override = (globalThis as { __viewerTheme?: Partial<Theme> }).__viewerTheme;
  if (!override) {
    return defaultTheme;
  }
  return {
    categories: { ...defaultTheme.categories, ...(override.categories ?? {}) },
    fallback: override.fallback ?? defaultTheme.fallback,
  };
}

export function categoryColor(category: string, theme: Theme = defaultTheme): string {
  return theme.categories[category] ?? theme.fallback;
}

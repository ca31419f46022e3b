package org.example.resources;

public class ResourceManager {
    private final Registry registry;

    public ResourceManager(Registry registry) {
        this.registry = registry;
    }

    public String getFullName() {
        return registry.name();
    }

    public State getScriptState() {
        return registry.state();
    }

    public void registerManagedResource(Resource resource) {
        registry.add(resource);
    }

    public int[] computeProductBlockingSizes(int rows, int cols) {
        return new int[] { rows, cols };
    }

    public int findLength(String text) {
        return text.length();
    }

    protected Connection dbConnection() {
        return registry.connection();
    }

    static String getStr(Object value) {
        return String.valueOf(value);
    }
}
